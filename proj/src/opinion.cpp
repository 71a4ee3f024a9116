#include "relcalc/opinion.hpp"

#include <cmath>
#include <sstream>

#include "relcalc/error.hpp"

namespace relcalc {

Opinion make_opinion(double belief, double disbelief, double uncertainty, double base_rate) {
  const struct {
    const char* name;
    double value;
  } components[] = {{"belief", belief},
                    {"disbelief", disbelief},
                    {"uncertainty", uncertainty},
                    {"base rate", base_rate}};
  for (const auto& [name, value] : components) {
    if (!std::isfinite(value) || value < -kTol || value > 1.0 + kTol) {
      std::ostringstream out;
      out << name << " " << value << " is outside [0, 1]";
      fail(errc::out_of_range, out.str());
    }
  }
  const double sum = belief + disbelief + uncertainty;
  if (std::abs(sum - 1.0) > kTol) {
    std::ostringstream out;
    out << "b + d + u = " << sum << ", expected 1";
    fail(errc::not_additive, out.str());
  }
  return Opinion{belief, disbelief, uncertainty, base_rate};
}

std::string_view opinion_flag_name(OpinionFlag flag) {
  switch (flag) {
    case OpinionFlag::logic_true: return "TRUE";
    case OpinionFlag::logic_false: return "FALSE";
    case OpinionFlag::dogmatic: return "DOGMATIC";
    case OpinionFlag::uncertain: return "UNCERTAIN";
    case OpinionFlag::vacuous: return "VACUOUS";
  }
  return "?";
}

std::set<OpinionFlag> classify_opinion(const Opinion& o) {
  std::set<OpinionFlag> flags;
  const double committed = o.belief + o.disbelief;
  if (std::abs(o.belief - 1.0) <= kTol) flags.insert(OpinionFlag::logic_true);
  if (std::abs(o.disbelief - 1.0) <= kTol) flags.insert(OpinionFlag::logic_false);
  if (std::abs(committed - 1.0) <= kTol) flags.insert(OpinionFlag::dogmatic);
  if (committed < 1.0 - kTol) flags.insert(OpinionFlag::uncertain);
  if (std::abs(committed) <= kTol) flags.insert(OpinionFlag::vacuous);
  return flags;
}

double projection(const Opinion& o) { return o.belief + o.base_rate * o.uncertainty; }

Opinion complement(const Opinion& o) {
  return Opinion{o.disbelief, o.belief, o.uncertainty, 1.0 - o.base_rate};
}

double default_base_rate(const Frame& frame) {
  return 1.0 / static_cast<double>(frame.size());
}

Opinion opinion_from_mass(const MassFunction& m, SubsetMask hypothesis, double base_rate) {
  if (hypothesis == 0 || !m.frame().contains(hypothesis)) {
    fail(errc::unknown_hypothesis, "hypothesis must be a non-empty subset of the frame");
  }
  if (hypothesis == m.frame().full_set()) {
    fail(errc::whole_frame, "opinion on the whole frame is undefined");
  }
  const double b = belief(m, hypothesis);
  const double pl = plausibility(m, hypothesis);
  return make_opinion(b, 1.0 - pl, pl - b, base_rate);
}

}  // namespace relcalc
