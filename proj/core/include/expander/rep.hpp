#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "expander/freq.hpp"
#include "expander/poly.hpp"

namespace expander {

/// Closed catalogue of the expressions whose representation functions the lab
/// counts. Argument order is the order of the input sets.
enum class ExprId {
  Add2,         // x + y
  CubicShift,   // (b - a)^3 + a^3 + x          over (a, b, x)
  ShiftQuad,    // f(x - y) + z                  f univariate
  Quad2Image,   // g(x, y)
  Quad3Image,   // f3(x, y, z)
  UniPlus,      // f(x) + y
  Quad2Plus,    // g(x, y) + z
  ScaleDiff,    // x * (a - b)                   over (x, a, b)
  CubeDiffSum,  // (a - b)^3 + (c - d)^3
  Mu4Sum,       // f(a) + b + g(c, d)
  Mu5Sum,       // x + y + g(z, t)
  Mu6Prod,      // x * (y + z + t + v)
};

std::string_view to_string(ExprId id) noexcept;
std::size_t arity(ExprId id) noexcept;

struct Expression {
  ExprId id;
  UniQuad f{};
  Quad2 g{};
  Quad3 f3{};

  static Expression add2() { return {ExprId::Add2}; }
  static Expression cubic_shift() { return {ExprId::CubicShift}; }
  static Expression shift_quad(UniQuad f) { return {ExprId::ShiftQuad, f}; }
  static Expression quad2_image(Quad2 g) { return {ExprId::Quad2Image, {}, g}; }
  static Expression quad3_image(Quad3 f3) { return {ExprId::Quad3Image, {}, {}, f3}; }
  static Expression uni_plus(UniQuad f) { return {ExprId::UniPlus, f}; }
  static Expression quad2_plus(Quad2 g) { return {ExprId::Quad2Plus, {}, g}; }
  static Expression scale_diff() { return {ExprId::ScaleDiff}; }
  static Expression cube_diff_sum() { return {ExprId::CubeDiffSum}; }
  static Expression mu4_sum(UniQuad f, Quad2 g) { return {ExprId::Mu4Sum, f, g}; }
  static Expression mu5_sum(Quad2 g) { return {ExprId::Mu5Sum, {}, g}; }
  static Expression mu6_prod() { return {ExprId::Mu6Prod}; }

  std::size_t arity() const noexcept { return expander::arity(id); }
  /// Direct evaluation at one tuple; args.size() == arity().
  Elem evaluate(const PrimeField& F, std::span<const Elem> args) const noexcept;
};

enum class RepBackend {
  Auto,         // convolution where the expression factors, enumeration otherwise
  Brute,        // enumerate every tuple
  Convolution,  // factor through exact cyclic convolutions
  CrossCheck,   // run both and require identical counts
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct RepOptions {
  std::uint64_t budget = kDefaultBudget;  // max tuple evaluations
  unsigned jobs = 1;
  RepBackend backend = RepBackend::Auto;
};

/// r(c) = #{tuples in sets[0] x ... x sets[k-1] : expr(tuple) = c}.
/// Throws ArityMismatch, FieldMismatch, BudgetExceeded, and InvariantViolated
/// when CrossCheck finds a disagreement.
FreqVector rep_function(const Expression& expr, std::span<const FpSet> sets, const RepOptions& opts = {});

}  // namespace expander
