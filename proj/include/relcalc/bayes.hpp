#pragma once

#include <span>
#include <vector>

namespace relcalc {

/// Raw three-term form of the Bayes rule: the marginal is supplied, not
/// derived.
struct BayesUpdate {
  double prior = 0.0;
  double likelihood = 0.0;
  double marginal = 0.0;
};

/// likelihood * prior / marginal. Throws ZeroMarginal / ImpossiblePosterior /
/// OutOfRange.
double posterior(const BayesUpdate& u);

/// Posteriors over a hypothesis partition; the marginal is computed by total
/// probability. Priors must sum to 1. Throws BadPartition / ZeroMarginal.
std::vector<double> posterior_over_partition(std::span<const double> priors,
                                             std::span<const double> likelihoods);

/// Folds posterior_over_partition over an evidence stream of likelihood
/// vectors. An empty stream returns the priors unchanged.
std::vector<double> sequential_update(std::span<const double> priors,
                                      std::span<const std::vector<double>> evidence);

}  // namespace relcalc
