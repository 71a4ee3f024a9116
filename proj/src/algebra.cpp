#include "relcalc/algebra.hpp"

#include <cmath>
#include <sstream>

#include "relcalc/error.hpp"

namespace relcalc {

namespace {

std::string format_triplet(double h, double n, double f) {
  std::ostringstream out;
  out << "(" << h << ", " << n << ", " << f << ")";
  return out.str();
}

}  // namespace

std::string_view stance_name(Stance s) {
  switch (s) {
    case Stance::hostile: return "hostile";
    case Stance::neutral: return "neutral";
    case Stance::friendly: return "friendly";
  }
  return "?";
}

std::optional<Stance> stance_from_name(std::string_view name) {
  for (Stance s : kStances) {
    if (stance_name(s) == name) return s;
  }
  return std::nullopt;
}

double WeightConfig::at(Stance s) const {
  switch (s) {
    case Stance::hostile: return hostile;
    case Stance::neutral: return neutral;
    case Stance::friendly: return friendly;
  }
  return 0.0;
}

int SignConfig::at(Stance s) const {
  switch (s) {
    case Stance::hostile: return hostile;
    case Stance::neutral: return neutral;
    case Stance::friendly: return friendly;
  }
  return 0;
}

double MassVector::at(Stance s) const {
  switch (s) {
    case Stance::hostile: return hostile;
    case Stance::neutral: return neutral;
    case Stance::friendly: return friendly;
  }
  return 0.0;
}

WeightConfig validate_weights(const std::array<double, 3>& raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double w = raw[i];
    if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
      std::ostringstream out;
      out << stance_name(kStances[i]) << " weight " << w << " is outside [0, 1]";
      fail(errc::out_of_range, out.str());
    }
  }
  const double sum = raw[0] + raw[1] + raw[2];
  if (std::abs(sum - 1.0) > kTol) {
    std::ostringstream out;
    out << "weights " << format_triplet(raw[0], raw[1], raw[2]) << " sum to " << sum
        << ", expected 1";
    fail(errc::sum_not_one, out.str());
  }
  return WeightConfig{raw[0], raw[1], raw[2]};
}

SignConfig validate_signs(const std::array<int, 3>& raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] != -1 && raw[i] != 1) {
      std::ostringstream out;
      out << stance_name(kStances[i]) << " sign " << raw[i] << " must be -1 or +1";
      fail(errc::out_of_range, out.str());
    }
  }
  return SignConfig{raw[0], raw[1], raw[2]};
}

SignConfig default_signs() { return SignConfig{-1, +1, +1}; }

ScaleBounds scale_bounds(const WeightConfig& w, const SignConfig& s) {
  ScaleBounds b;
  b.lower = s.hostile * w.hostile;
  b.upper = s.neutral * w.neutral + s.friendly * w.friendly;
  b.middle_lo = b.lower + w.hostile;
  b.middle_hi = b.upper - s.friendly * w.friendly;
  const double scalar_total = std::abs(s.hostile * w.hostile) +
                              std::abs(s.neutral * w.neutral) +
                              std::abs(s.friendly * w.friendly);
  if (std::abs(scalar_total - 1.0) > kTol) {
    std::ostringstream out;
    out << "scalar-weight magnitudes sum to " << scalar_total << ", expected 1";
    fail(errc::validation_error, out.str());
  }
  return b;
}

MassVector make_mass_vector(double hostile, double neutral, double friendly) {
  const std::array<double, 3> values{hostile, neutral, friendly};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0 || values[i] > 1.0 + kTol) {
      std::ostringstream out;
      out << stance_name(kStances[i]) << " mass " << values[i] << " is outside [0, 1]";
      fail(errc::out_of_range, out.str());
    }
  }
  return MassVector{hostile, neutral, friendly};
}

namespace {

double sum_stance_values(std::span<const double> values, Stance stance) {
  double total = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      std::ostringstream out;
      out << stance_name(stance) << " property value " << v << " is outside [0, 1]";
      fail(errc::out_of_range, out.str());
    }
    total += v;
  }
  if (total > 1.0 + kTol) {
    std::ostringstream out;
    out << stance_name(stance) << " mass " << total << " exceeds 1";
    fail(errc::mass_overflow, out.str());
  }
  return total;
}

}  // namespace

MassVector aggregate_mass(std::span<const double> hostile_values,
                          std::span<const double> neutral_values,
                          std::span<const double> friendly_values) {
  return MassVector{sum_stance_values(hostile_values, Stance::hostile),
                    sum_stance_values(neutral_values, Stance::neutral),
                    sum_stance_values(friendly_values, Stance::friendly)};
}

double trust_mass(const MassVector& m, const WeightConfig& w, const SignConfig& s) {
  return s.hostile * w.hostile * m.hostile + s.neutral * w.neutral * m.neutral +
         s.friendly * w.friendly * m.friendly;
}

double trust_strength(const MassVector& m, const WeightConfig& w) {
  return w.hostile * m.hostile + w.neutral * m.neutral + w.friendly * m.friendly;
}

namespace {

void check_on_scale(double t_mass, const ScaleBounds& b) {
  if (t_mass < b.lower - kTol || t_mass > b.upper + kTol) {
    std::ostringstream out;
    out << "perception " << t_mass << " is outside the scale [" << b.lower << ", "
        << b.upper << "]";
    fail(errc::out_of_scale, out.str());
  }
}

}  // namespace

Stance classify(double t_mass, const ScaleBounds& b) {
  check_on_scale(t_mass, b);
  // Band edges resolve to neutral within tolerance.
  if (t_mass < b.middle_lo - kTol) return Stance::hostile;
  if (t_mass <= b.middle_hi + kTol) return Stance::neutral;
  return Stance::friendly;
}

SeptupleConfig default_septuple(const ScaleBounds& b) {
  SeptupleConfig cfg;
  const double hostile_width = b.middle_lo - b.lower;
  if (hostile_width > 0.0) {
    cfg.intervals.push_back({b.lower + hostile_width / 3.0, "Hostile"});
    cfg.intervals.push_back({b.lower + 2.0 * hostile_width / 3.0, "Near-Hostile"});
    cfg.intervals.push_back({b.middle_lo, "Near-Neutral"});
  }
  if (b.middle_hi > b.middle_lo) {
    cfg.intervals.push_back({b.middle_hi, "Neutral"});
  }
  const double friendly_width = b.upper - b.middle_hi;
  if (friendly_width > 0.0) {
    cfg.intervals.push_back({b.middle_hi + friendly_width / 3.0, "Near-Neutral"});
    cfg.intervals.push_back({b.middle_hi + 2.0 * friendly_width / 3.0, "Near-Friendly"});
    cfg.intervals.push_back({b.upper, "Friendly"});
  }
  return cfg;
}

std::string septuple_label(double t_mass, const ScaleBounds& b, const SeptupleConfig& cfg) {
  if (cfg.intervals.empty()) {
    fail(errc::validation_error, "septuple config has no intervals");
  }
  double previous = b.lower;
  for (const auto& interval : cfg.intervals) {
    if (!(interval.upper > previous)) {
      std::ostringstream out;
      out << "septuple breakpoint " << interval.upper << " does not increase past "
          << previous;
      fail(errc::validation_error, out.str());
    }
    previous = interval.upper;
  }
  if (std::abs(cfg.intervals.back().upper - b.upper) > kTol) {
    std::ostringstream out;
    out << "last septuple breakpoint " << cfg.intervals.back().upper
        << " does not reach the scale upper bound " << b.upper;
    fail(errc::validation_error, out.str());
  }
  check_on_scale(t_mass, b);
  // Intervals are half-open [lo, hi) except the last; a value within
  // tolerance of a breakpoint belongs to the next interval.
  for (const auto& interval : cfg.intervals) {
    if (t_mass < interval.upper - kTol) return interval.label;
  }
  return cfg.intervals.back().label;  // closed top interval
}

std::string_view note_name(Note n) {
  switch (n) {
    case Note::no_hostile: return "NOTE_NO_HOSTILE";
    case Note::contradictory: return "NOTE_CONTRADICTORY";
    case Note::consistent: return "NOTE_CONSISTENT";
    case Note::neutral_bias: return "NOTE_NEUTRAL_BIAS";
  }
  return "?";
}

std::optional<Note> note_from_name(std::string_view name) {
  for (Note n : {Note::no_hostile, Note::contradictory, Note::consistent, Note::neutral_bias}) {
    if (note_name(n) == name) return n;
  }
  return std::nullopt;
}

Interpretation interpret(double t_mass, double strength, const MassVector& m,
                         const ScaleBounds& b, double epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0 || epsilon >= 0.5) {
    std::ostringstream out;
    out << "epsilon " << epsilon << " is outside (0, 0.5)";
    fail(errc::out_of_range, out.str());
  }
  Interpretation result;
  if (m.hostile == 0.0) result.notes.push_back(Note::no_hostile);
  if (strength >= 1.0 - epsilon - kTol) result.notes.push_back(Note::contradictory);
  if (std::abs(strength - 0.5) <= epsilon + kTol) result.notes.push_back(Note::consistent);
  if (std::abs(strength - m.neutral) <= epsilon + kTol && t_mass > kTol) {
    result.notes.push_back(Note::neutral_bias);
  }
  result.fragile = (strength - t_mass) > b.band_width() + kTol;
  return result;
}

}  // namespace relcalc
