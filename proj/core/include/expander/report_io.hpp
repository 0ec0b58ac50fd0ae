#pragma once

#include <span>
#include <string>
#include <vector>

#include "expander/fit.hpp"
#include "expander/growth.hpp"

namespace expander {

inline constexpr std::string_view kCsvVersionLine = "# expander-lab v1";
inline constexpr std::string_view kCsvColumns =
    "theorem_id,p,family,size,seed,measured,exponent_num,exponent_den,bound_rhs,constant_ratio,precondition_ok";

std::string csv_row(const GrowthReport& r);
/// Version line, column header, then one row per report.
std::string to_csv(std::span<const GrowthReport> reports);

/// Fitted slope for one (theorem, family) series.
struct FitSummary {
  TheoremId theorem;
  std::string family;
  std::size_t points = 0;
  ExponentFit fit;
  Rational exponent;
  double gap() const noexcept { return fit.slope - exponent.value(); }
};

/// "# fit theorem=.. family=.. points=.. slope=.. exponent=a/b gap=.. residual=.."
std::string fit_comment(const FitSummary& s);

/// Full records including extras and invariant checks.
std::string to_json(std::span<const GrowthReport> reports, std::span<const FitSummary> fits);

/// Writes to a sibling temp file and renames over `path`.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace expander
