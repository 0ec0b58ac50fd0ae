#include "expander/fit.hpp"

#include <cmath>

#include "expander/error.hpp"

namespace expander {

ExponentFit fit_exponent(std::span<const std::pair<std::uint64_t, std::uint64_t>> points) {
  if (points.size() < 3) throw Error(Errc::InsufficientData, "need at least 3 points to fit an exponent");
  long double sx = 0, sy = 0;
  for (const auto& [size, q] : points) {
    if (size < 2 || q < 1) throw Error(Errc::InsufficientData, "sizes must be >= 2 and quantities >= 1");
    sx += std::log(static_cast<long double>(size));
    sy += std::log(static_cast<long double>(q));
  }
  const long double n = static_cast<long double>(points.size());
  const long double mx = sx / n, my = sy / n;
  long double sxx = 0, sxy = 0;
  for (const auto& [size, q] : points) {
    const long double dx = std::log(static_cast<long double>(size)) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(static_cast<long double>(q)) - my);
  }
  if (sxx <= 0) throw Error(Errc::InsufficientData, "need at least two distinct sizes");
  ExponentFit fit;
  const long double slope = sxy / sxx;
  const long double intercept = my - slope * mx;
  long double ss = 0;
  for (const auto& [size, q] : points) {
    const long double e =
        std::log(static_cast<long double>(q)) - (intercept + slope * std::log(static_cast<long double>(size)));
    ss += e * e;
  }
  fit.slope = static_cast<double>(slope);
  fit.intercept = static_cast<double>(intercept);
  fit.residual = static_cast<double>(std::sqrt(ss / n));
  return fit;
}

}  // namespace expander
