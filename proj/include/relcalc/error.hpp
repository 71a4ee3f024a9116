#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relcalc {

/// Absolute tolerance used by every invariant check in the library.
inline constexpr double kTol = 1e-9;

enum class errc {
  // relation algebra
  sum_not_one,
  out_of_range,
  mass_overflow,
  out_of_scale,
  // evidence
  not_normalized,
  negative_mass,
  empty_set_mass,
  unknown_hypothesis,
  total_conflict,
  frame_mismatch,
  // opinions
  not_additive,
  whole_frame,
  // bayes
  zero_marginal,
  impossible_posterior,
  bad_partition,
  // catalogs and dossiers
  unknown_property,
  // file handling
  io_error,
  schema_error,
  validation_error,
};

std::string_view errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace relcalc
