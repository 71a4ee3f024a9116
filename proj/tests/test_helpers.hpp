#pragma once

#include <optional>

#include "relcalc/error.hpp"

namespace testutil {

// Runs fn and reports the relcalc error code it throws, if any.
template <typename Fn>
std::optional<relcalc::errc> error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const relcalc::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testutil
