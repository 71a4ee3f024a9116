#include "relcalc/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relcalc/error.hpp"

namespace relcalc {

namespace {

void check_probability(const char* name, double value) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    std::ostringstream out;
    out << name << " " << value << " is not a probability in [0, 1]";
    fail(errc::out_of_range, out.str());
  }
}

}  // namespace

double posterior(const BayesUpdate& u) {
  check_probability("prior", u.prior);
  check_probability("likelihood", u.likelihood);
  check_probability("marginal", u.marginal);
  if (u.marginal <= 0.0) {
    fail(errc::zero_marginal, "marginal probability must be positive");
  }
  const double joint = u.likelihood * u.prior;
  if (joint > u.marginal + kTol) {
    std::ostringstream out;
    out << "likelihood * prior = " << joint << " exceeds the marginal " << u.marginal;
    fail(errc::impossible_posterior, out.str());
  }
  return std::clamp(joint / u.marginal, 0.0, 1.0);
}

namespace {

void check_partition(std::span<const double> priors, std::span<const double> likelihoods) {
  if (priors.empty() || priors.size() != likelihoods.size()) {
    std::ostringstream out;
    out << "partition of " << priors.size() << " priors does not match "
        << likelihoods.size() << " likelihoods";
    fail(errc::bad_partition, out.str());
  }
  double prior_sum = 0.0;
  for (double p : priors) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      std::ostringstream out;
      out << "prior " << p << " is not a probability in [0, 1]";
      fail(errc::bad_partition, out.str());
    }
    prior_sum += p;
  }
  if (std::abs(prior_sum - 1.0) > kTol) {
    std::ostringstream out;
    out << "priors sum to " << prior_sum << ", expected 1";
    fail(errc::bad_partition, out.str());
  }
  for (double l : likelihoods) {
    if (!std::isfinite(l) || l < 0.0 || l > 1.0) {
      std::ostringstream out;
      out << "likelihood " << l << " is not a probability in [0, 1]";
      fail(errc::bad_partition, out.str());
    }
  }
}

}  // namespace

std::vector<double> posterior_over_partition(std::span<const double> priors,
                                             std::span<const double> likelihoods) {
  check_partition(priors, likelihoods);
  double marginal = 0.0;
  for (std::size_t i = 0; i < priors.size(); ++i) {
    marginal += priors[i] * likelihoods[i];
  }
  if (marginal == 0.0) {
    fail(errc::zero_marginal, "every likelihood * prior product is zero");
  }
  std::vector<double> posteriors(priors.size());
  for (std::size_t i = 0; i < priors.size(); ++i) {
    posteriors[i] = priors[i] * likelihoods[i] / marginal;
  }
  return posteriors;
}

std::vector<double> sequential_update(std::span<const double> priors,
                                      std::span<const std::vector<double>> evidence) {
  std::vector<double> state(priors.begin(), priors.end());
  if (evidence.empty()) {
    check_partition(state, std::vector<double>(state.size(), 1.0));
    return state;
  }
  for (const auto& likelihoods : evidence) {
    state = posterior_over_partition(state, likelihoods);
  }
  return state;
}

}  // namespace relcalc
