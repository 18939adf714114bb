#pragma once

#include <algorithm>

namespace ipx {

/// Relative tolerance used for every inequality and hypothesis assertion.
/// A quantity q compared against zero is considered nonnegative when
/// q >= -band(scale), with band(scale) = eta * max(1, scale).
struct Tolerance {
  double eta = 1e-9;

  double band(double scale) const noexcept { return eta * std::max(1.0, scale); }

  /// Default tolerance, overridden by the IPX_TOLERANCE environment variable
  /// when it holds a positive number.
  static Tolerance from_env();
};

}  // namespace ipx
