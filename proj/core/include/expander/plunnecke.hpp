#pragma once

#include <cstdint>
#include <optional>

#include "expander/fpset.hpp"
#include "expander/growth.hpp"

namespace expander {

/// |A+B| <= K|A|; looks for X in A with |X| >= (1-delta)|A| and
/// |X + kB| <= (K/delta)^k |X|.
struct PlunneckeParams {
  Rational K{1, 1};
  Rational delta{1, 2};
  unsigned k = 1;
};

enum class SearchMode { Exhaustive, Greedy };

inline constexpr std::size_t kExhaustiveLimit = 20;

struct PlunneckeResult {
  std::optional<FpSet> witness;
  std::uint64_t subsets_examined = 0;
  /// Exhaustive search found nothing: contradicts the existence claim.
  bool disproof = false;
};

/// K = |A+B| / |A| in lowest terms.
Rational doubling_constant(const FpSet& A, const FpSet& B);

/// True iff X satisfies both conclusions for (A, B, params).
bool plunnecke_conclusion_holds(const FpSet& X, const FpSet& A, const FpSet& kB, const PlunneckeParams& params);

/// Throws ParamsInvalid (|A+B| > K|A|, K < 1, delta outside (0,1), k = 0, A
/// empty) and SearchSpaceTooLarge (exhaustive with |A| > 20). Exhaustive
/// search visits subsets by decreasing size, masks ascending within a size.
PlunneckeResult plunnecke_search(const FpSet& A, const FpSet& B, const PlunneckeParams& params, SearchMode mode);

}  // namespace expander
