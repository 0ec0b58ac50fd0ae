#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace expander {

struct ExponentFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // root-mean-square residual in log space
};

/// Least-squares line through (log size, log quantity). Needs at least three
/// points, sizes >= 2, quantities >= 1 and two distinct sizes (InsufficientData).
ExponentFit fit_exponent(std::span<const std::pair<std::uint64_t, std::uint64_t>> points);

}  // namespace expander
