#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expander/fpset.hpp"
#include "expander/freq.hpp"
#include "expander/poly.hpp"
#include "expander/rep.hpp"

namespace expander {

enum class TheoremId { CO0, MU4, MU5, MU6A, MU6B, MAYMAY, THM2STAR, BUC1, MU1, MOT, BA, TONGTONG };

std::string_view to_string(TheoremId id) noexcept;
/// Case-insensitive; throws ConfigInvalid.
TheoremId parse_theorem(std::string_view name);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

/// Growth exponent attached to each claim; 0/1 marks min-form bounds that are
/// not a single power of the size parameter.
Rational theorem_exponent(TheoremId id) noexcept;

/// base^e1 <= other^e2, exactly.
bool pow_le(std::uint64_t base, unsigned e1, std::uint64_t other, unsigned e2);
/// Smallest m with m^2 >= n.
Wide isqrt_ceil(Wide n);

struct InvariantCheck {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct Extra {
  std::string name;
  double value;
};

/// One experiment record.
struct GrowthReport {
  TheoremId theorem = TheoremId::CO0;
  std::uint64_t p = 0;
  std::string family;
  std::uint64_t size = 0;
  std::uint64_t seed = 0;
  std::uint64_t measured = 0;
  Rational exponent;
  double bound_rhs = 0;
  double constant_ratio = 0;
  bool precondition_ok = false;
  std::string precondition;
  std::vector<Extra> extras;
  std::vector<InvariantCheck> checks;

  /// All non-skipped invariant checks passed.
  bool hard_ok() const noexcept;
  std::optional<double> extra(std::string_view name) const;
};

/// Controls the cross-checks attached to each quantity.
struct LabOptions {
  RepOptions rep;
  /// Construct incidence instances only up to this many points.
  std::uint64_t incidence_points_limit = 250'000;
  /// Work budget handed to count_incidences; over it the check is skipped.
  std::uint64_t incidence_budget = 200'000'000;
};

GrowthReport quantity_co0(const FpSet& A, const LabOptions& opts = {});
GrowthReport quantity_thm2star(const FpSet& A, const FpSet& X, const LabOptions& opts = {});
/// Throws PolynomialDegenerate unless g has an xy-term and f is quadratic.
GrowthReport quantity_mu4(const FpSet& A, const UniQuad& f, const Quad2& g, const LabOptions& opts = {});
/// Throws RangeError unless 1 <= N <= p-1; PolynomialDegenerate without xy-term.
GrowthReport quantity_mu5(const FieldPtr& F, std::uint64_t N, const Quad2& g, const LabOptions& opts = {});
enum class Mu6Variant { A, B };
GrowthReport quantity_mu6(const FieldPtr& F, std::uint64_t N, Mu6Variant variant, const LabOptions& opts = {});
/// Throws PolynomialDegenerate if f does not depend on both variables or is
/// of the form g(alpha x + beta y).
GrowthReport quantity_maymay(const FpSet& A, const Quad2& f, const LabOptions& opts = {});
GrowthReport quantity_buc1(const FpSet& A, const UniQuad& f, const LabOptions& opts = {});
GrowthReport quantity_mu1(const FieldPtr& F, std::uint64_t N, const LabOptions& opts = {});
GrowthReport quantity_mot(const Quad2& g, const FpSet& A, const FpSet& X, const LabOptions& opts = {});
GrowthReport quantity_ba(const FpSet& X, const FpSet& A, const LabOptions& opts = {});

struct TongtongResult {
  Wide energy = 0;
  Wide rhs = 0;  // ceil((|A||B||C|)^{3/2}) + |A||B||C|^2
  double ratio = 0;
  bool inequality_holds = false;
  bool not_decomposable = false;
  bool depends_on_each = false;
  bool sizes_ok = false;      // |A| = |B| <= |C|
  bool p_squared_ok = false;  // |A||B||C| <= p^2
};

TongtongResult energy_tongtong(const Quad3& f3, const FpSet& A, const FpSet& B, const FpSet& C,
                               const RepOptions& rep = {});
GrowthReport quantity_tongtong(const Quad3& f3, const FpSet& A, const FpSet& B, const FpSet& C,
                               const LabOptions& opts = {});

/// (b - a)^3 + a^3 == 3b((a - b/2)^2 + b^2/12) for every a, b in F_p.
/// Returns the number of failing pairs.
std::uint64_t cubic_identity_failures(const PrimeField& F);

}  // namespace expander
