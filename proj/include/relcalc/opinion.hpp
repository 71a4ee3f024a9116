#pragma once

#include <set>
#include <string_view>

#include "relcalc/evidence.hpp"

namespace relcalc {

/// Subjective-logic opinion: belief, disbelief, uncertainty and the a-priori
/// base rate. b + d + u = 1, all components in [0, 1].
struct Opinion {
  double belief = 0.0;
  double disbelief = 0.0;
  double uncertainty = 1.0;
  double base_rate = 0.5;
};

/// Throws NotAdditive / OutOfRange.
Opinion make_opinion(double belief, double disbelief, double uncertainty, double base_rate);

enum class OpinionFlag {
  logic_true,   // b = 1
  logic_false,  // d = 1
  dogmatic,     // b + d = 1 (no uncertainty)
  uncertain,    // b + d < 1
  vacuous,      // b + d = 0 (complete uncertainty)
};

std::string_view opinion_flag_name(OpinionFlag flag);

std::set<OpinionFlag> classify_opinion(const Opinion& o);

/// Probability projection E = b + a*u.
double projection(const Opinion& o);

/// (d, b, u, 1-a): swaps truth polarity, satisfies E(NOT o) = 1 - E(o).
Opinion complement(const Opinion& o);

/// Uniform base rate over the frame's hypotheses: 1/2 on binary frames, 1/3
/// on the three-stance frame.
double default_base_rate(const Frame& frame);

/// Opinion on a strict non-empty subset of a frame: b = Bel(h),
/// d = 1 - Pl(h), u = Pl(h) - Bel(h). Throws UnknownHypothesis / WholeFrame.
Opinion opinion_from_mass(const MassFunction& m, SubsetMask hypothesis, double base_rate);

}  // namespace relcalc
