#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expander {

enum class Errc {
  NotPrime,
  ModulusTooSmall,
  ModulusTooLarge,
  DivisionByZero,
  RangeError,
  FieldMismatch,
  BudgetExceeded,
  ArityMismatch,
  DegenerateQuadratic,
  PolynomialDegenerate,
  ModulusTooLargeForOracle,
  ParamsInvalid,
  SearchSpaceTooLarge,
  InsufficientData,
  ConfigInvalid,
  ParseError,
  InvariantViolated,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace expander
