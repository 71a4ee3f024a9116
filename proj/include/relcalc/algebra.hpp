#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace relcalc {

/// The three relation stances. Canonical vector ordering everywhere is
/// (hostile, neutral, friendly).
enum class Stance { hostile = 0, neutral = 1, friendly = 2 };

inline constexpr std::size_t kStanceCount = 3;
inline constexpr std::array<Stance, kStanceCount> kStances{
    Stance::hostile, Stance::neutral, Stance::friendly};

std::string_view stance_name(Stance s);
std::optional<Stance> stance_from_name(std::string_view name);

/// Per-stance normalization weights. Nonnegative, sum to 1.
struct WeightConfig {
  double hostile = 0.0;
  double neutral = 0.0;
  double friendly = 0.0;

  double at(Stance s) const;
};

/// Validates three weights given in canonical (hostile, neutral, friendly)
/// order. Throws SumNotOne / OutOfRange.
WeightConfig validate_weights(const std::array<double, 3>& raw);

/// Per-stance scalar signs, each exactly -1 or +1.
struct SignConfig {
  int hostile = -1;
  int neutral = +1;
  int friendly = +1;

  int at(Stance s) const;
};

SignConfig validate_signs(const std::array<int, 3>& raw);

/// (-1, +1, +1) for (hostile, neutral, friendly).
SignConfig default_signs();

/// Interval scale derived from weights and signs. The closed band
/// [middle_lo, middle_hi] is the neutral zone.
struct ScaleBounds {
  double lower = 0.0;
  double upper = 0.0;
  double middle_lo = 0.0;
  double middle_hi = 0.0;

  double band_width() const { return middle_hi - middle_lo; }
};

ScaleBounds scale_bounds(const WeightConfig& w, const SignConfig& s);

/// Per-stance property-mass sums, each in [0, 1].
struct MassVector {
  double hostile = 0.0;
  double neutral = 0.0;
  double friendly = 0.0;

  double at(Stance s) const;
};

/// Validating constructor for a mass vector given directly (not summed from
/// property values). Throws OutOfRange.
MassVector make_mass_vector(double hostile, double neutral, double friendly);

/// Sums per-stance property values. Every value must lie in [0, 1] and each
/// stance sum must not exceed 1. Throws OutOfRange / MassOverflow.
MassVector aggregate_mass(std::span<const double> hostile_values,
                          std::span<const double> neutral_values,
                          std::span<const double> friendly_values);

/// Signed weighted sum locating the relation on the interval scale.
double trust_mass(const MassVector& m, const WeightConfig& w, const SignConfig& s);

/// Unsigned weighted sum; total evidence observed regardless of polarity.
double trust_strength(const MassVector& m, const WeightConfig& w);

/// Hostile below the band, neutral inside the closed band, friendly above.
/// Throws OutOfScale when t_mass leaves [lower, upper] beyond tolerance.
Stance classify(double t_mass, const ScaleBounds& b);

/// One septuple interval: everything below `upper` (and at or above the
/// previous breakpoint) carries `label`.
struct SeptupleInterval {
  double upper = 0.0;
  std::string label;
};

/// Ordered breakpoints partitioning [lower, upper]. Intervals are half-open
/// [lo, hi) except the last, which is closed.
struct SeptupleConfig {
  std::vector<SeptupleInterval> intervals;
};

/// Seven equal-width refinement of the triple scale: the hostile zone and the
/// friendly zone are each split into thirds around the neutral band.
SeptupleConfig default_septuple(const ScaleBounds& b);

/// Label of the interval containing t_mass. Throws OutOfScale, or
/// ValidationError when the config does not partition [lower, upper].
std::string septuple_label(double t_mass, const ScaleBounds& b, const SeptupleConfig& cfg);

/// Interpretation codes attached to a perception.
enum class Note { no_hostile, contradictory, consistent, neutral_bias };

std::string_view note_name(Note n);
std::optional<Note> note_from_name(std::string_view name);

struct Interpretation {
  bool fragile = false;
  std::vector<Note> notes;
};

/// Reads the relation between t_mass and strength: flags a missing hostile
/// component, contradictory or consistent observation periods, neutral bias,
/// and fragility (strength-to-mass gap wider than the neutral band).
/// epsilon must lie in (0, 0.5).
Interpretation interpret(double t_mass, double strength, const MassVector& m,
                         const ScaleBounds& b, double epsilon);

/// Full result of a relation computation. `stance` is empty when the
/// relation is undefined (no property enabled in any stance).
struct TrustPerception {
  double t_mass = 0.0;
  double strength = 0.0;
  std::optional<Stance> stance;
  std::string septuple_label;
  bool fragile = false;
  std::vector<Note> notes;
};

}  // namespace relcalc
