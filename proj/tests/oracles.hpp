#pragma once

// Test-only reference computations, kept independent of the library's
// implementation paths: subset sums are enumerated over the whole power set,
// combination over the full pair grid, and sequential updates collapse to a
// single product of likelihoods.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "relcalc/evidence.hpp"

namespace oracle {

// Bel(A) = sum of m(B) over every non-empty B that is a subset of A.
inline double belief_enum(const relcalc::MassFunction& m, relcalc::SubsetMask subset) {
  const std::uint32_t full = m.frame().full_set();
  double total = 0.0;
  for (std::uint32_t candidate = 1; candidate <= full; ++candidate) {
    if ((candidate & ~subset) == 0) total += m.mass(candidate);
  }
  return total;
}

// Pl(A) = sum of m(B) over every B that intersects A.
inline double plausibility_enum(const relcalc::MassFunction& m, relcalc::SubsetMask subset) {
  const std::uint32_t full = m.frame().full_set();
  double total = 0.0;
  for (std::uint32_t candidate = 1; candidate <= full; ++candidate) {
    if ((candidate & subset) != 0) total += m.mass(candidate);
  }
  return total;
}

struct CombineEnumResult {
  double conflict = 0.0;
  bool total_conflict = false;
  std::map<relcalc::SubsetMask, double> masses;
};

// Dempster combination over the dense subset-pair grid.
inline CombineEnumResult combine_enum(const relcalc::MassFunction& a,
                                      const relcalc::MassFunction& b) {
  const std::uint32_t full = a.frame().full_set();
  CombineEnumResult result;
  for (std::uint32_t x = 1; x <= full; ++x) {
    for (std::uint32_t y = 1; y <= full; ++y) {
      const double product = a.mass(x) * b.mass(y);
      if (product == 0.0) continue;
      const std::uint32_t meet = x & y;
      if (meet == 0) {
        result.conflict += product;
      } else {
        result.masses[meet] += product;
      }
    }
  }
  if (1.0 - result.conflict <= 1e-9) {
    result.total_conflict = true;
    return result;
  }
  for (auto& [subset, value] : result.masses) value /= 1.0 - result.conflict;
  return result;
}

// Posterior over a partition after a stream of independent likelihood
// vectors: posterior_i is proportional to prior_i times the product of every
// likelihood for hypothesis i.
inline std::vector<double> product_posteriors(
    const std::vector<double>& priors, const std::vector<std::vector<double>>& evidence) {
  std::vector<double> weights(priors);
  for (const auto& likelihoods : evidence) {
    for (std::size_t i = 0; i < weights.size(); ++i) weights[i] *= likelihoods[i];
  }
  double total = 0.0;
  for (double w : weights) total += w;
  for (double& w : weights) w /= total;
  return weights;
}

// Naive three-term loop for the signed weighted sum.
inline double trust_mass_loop(const std::array<double, 3>& masses,
                              const std::array<double, 3>& weights,
                              const std::array<int, 3>& signs) {
  double total = 0.0;
  for (std::size_t i = 0; i < 3; ++i) total += signs[i] * weights[i] * masses[i];
  return total;
}

}  // namespace oracle
