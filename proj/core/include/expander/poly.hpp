#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "expander/field.hpp"

namespace expander {

/// f(u) = a*u^2 + d*u + c0.
struct UniQuad {
  Elem a = 0, d = 0, c0 = 0;

  Elem operator()(const PrimeField& F, Elem u) const noexcept {
    return F.add(F.mul(F.add(F.mul(a, u), d), u), c0);
  }
  bool operator==(const UniQuad&) const = default;
};

/// f(x, y) = a*x^2 + b*y^2 + c*xy + d*x + e*y + c0.
struct Quad2 {
  Elem a = 0, b = 0, c = 0, d = 0, e = 0, c0 = 0;

  Elem operator()(const PrimeField& F, Elem x, Elem y) const noexcept {
    const Elem quad = F.add(F.add(F.mul(F.mul(a, x), x), F.mul(F.mul(b, y), y)), F.mul(F.mul(c, x), y));
    const Elem lin = F.add(F.add(F.mul(d, x), F.mul(e, y)), c0);
    return F.add(quad, lin);
  }
  bool operator==(const Quad2&) const = default;

  /// Reduces arbitrary integers mod p.
  static Quad2 from_integers(const PrimeField& F, std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t d, std::int64_t e, std::int64_t c0 = 0);
};

/// Ten coefficients of a quadratic in (x, y, z).
struct Quad3 {
  enum Term { XX, YY, ZZ, XY, XZ, YZ, X, Y, Z, ONE, kTerms };
  std::array<Elem, kTerms> coef{};

  Elem operator()(const PrimeField& F, Elem x, Elem y, Elem z) const noexcept;
  bool operator==(const Quad3&) const = default;
};

/// f = g(alpha*x + beta*y) with g(t) = g2*t^2 + g1*t + g0.
struct CompositionWitness {
  Elem alpha = 0, beta = 0;
  Elem g2 = 0, g1 = 0, g0 = 0;
};

/// f3 = g(l1*x + l2*y + l3*z + l4) with g(t) = g2*t^2 + g1*t + g0.
struct CompositionWitness3 {
  Elem lambda1 = 0, lambda2 = 0, lambda3 = 0, lambda4 = 0;
  Elem g2 = 0, g1 = 0, g0 = 0;
};

/// f3 = hx(x) + ky(y) + lz(z): the degree-one-outer case of g(h(x)+k(y)+l(z)).
struct SeparableWitness3 {
  UniQuad hx, ky, lz;
};

using Decomposition3 = std::variant<CompositionWitness3, SeparableWitness3>;

bool has_xy_term(const Quad2& f) noexcept;
bool depends_on_each_variable(const Quad2& f) noexcept;
bool depends_on_each_variable(const Quad3& f) noexcept;
bool quadratic_part_zero(const Quad2& f) noexcept;

/// Witness iff f = g(alpha*x + beta*y) identically; closed-form coefficient match.
std::optional<CompositionWitness> classify_rank_one(const PrimeField& F, const Quad2& f);

/// f'(x, y, z) = f(z - x, y), coefficientwise.
Quad3 shift_compose(const PrimeField& F, const Quad2& f);

/// Witness iff f3 = g(h(x) + k(y) + l(z)) for polynomials g, h, k, l. For a
/// quadratic f3 this means either rank one in a linear form (deg g = 2) or a
/// sum of univariate pieces (deg g <= 1).
std::optional<Decomposition3> classify_additively_decomposable3(const PrimeField& F, const Quad3& f3);

/// Rank-one branch only (the lambda form).
std::optional<CompositionWitness3> classify_rank_one3(const PrimeField& F, const Quad3& f3);

Quad2 expand(const PrimeField& F, const CompositionWitness& w);
Quad3 expand(const PrimeField& F, const CompositionWitness3& w);
Quad3 expand(const PrimeField& F, const SeparableWitness3& w);
Quad3 expand(const PrimeField& F, const Decomposition3& w);

inline constexpr Elem kOracleModulusLimit = 11;

/// Exhaustive search over every (alpha, beta, g2, g1, g0). p <= 11.
std::optional<CompositionWitness> oracle_classify(const PrimeField& F, const Quad2& f);
/// Exhaustive search over every (l1..l4, g2, g1, g0), plus a pointwise
/// mixed-difference test for the separable form. p <= 11.
std::optional<Decomposition3> oracle_classify(const PrimeField& F, const Quad3& f3);

/// Reduction applied before the shift: the x slot must carry a nonzero x^2
/// coefficient. When a = 0 and b != 0 the variables are swapped, which leaves
/// max(|A+A|, |f(A,A)|) unchanged.
enum class ShiftBranch { AsGiven, Swapped, NoSquareTerm };
struct NormalizedQuad2 {
  Quad2 f;
  ShiftBranch branch;
};
NormalizedQuad2 normalize_for_shift(const Quad2& f) noexcept;
std::string_view to_string(ShiftBranch b) noexcept;

/// Parses "a,b,c,d,e[,c0]". Throws ParseError.
Quad2 parse_quad2(const PrimeField& F, std::string_view text);
/// Parses "a,d[,c0]" for a*u^2 + d*u + c0. Throws ParseError.
UniQuad parse_uniquad(const PrimeField& F, std::string_view text);

std::string to_string(const Quad2& f);
std::string to_string(const Quad3& f);

}  // namespace expander
