#include "expander/plunnecke.hpp"

#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace expander {

using boost::multiprecision::cpp_int;
using boost::multiprecision::pow;

Rational doubling_constant(const FpSet& A, const FpSet& B) {
  const auto num = static_cast<std::int64_t>(sumset(A, B).size());
  const auto den = static_cast<std::int64_t>(A.size());
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

bool plunnecke_conclusion_holds(const FpSet& X, const FpSet& A, const FpSet& kB, const PlunneckeParams& params) {
  if (X.empty() || !X.is_subset_of(A)) return false;
  const auto& [Kn, Kd] = params.K;
  const auto& [dn, dd] = params.delta;
  // |X| >= (1 - dn/dd)|A|
  if (cpp_int(X.size()) * dd < cpp_int(dd - dn) * A.size()) return false;
  // |X + kB| (Kd dn)^k <= (Kn dd)^k |X|
  const cpp_int lhs = cpp_int(sumset(X, kB).size()) * pow(cpp_int(Kd) * dn, params.k);
  const cpp_int rhs = pow(cpp_int(Kn) * dd, params.k) * X.size();
  return lhs <= rhs;
}

PlunneckeResult plunnecke_search(const FpSet& A, const FpSet& B, const PlunneckeParams& params, SearchMode mode) {
  require_same_field(A, B);
  const auto& [Kn, Kd] = params.K;
  const auto& [dn, dd] = params.delta;
  if (A.empty() || B.empty()) throw Error(Errc::ParamsInvalid, "A and B must be nonempty");
  if (Kd <= 0 || Kn < Kd) throw Error(Errc::ParamsInvalid, "K must be >= 1");
  if (dd <= 0 || dn <= 0 || dn >= dd) throw Error(Errc::ParamsInvalid, "delta must lie in (0, 1)");
  if (params.k == 0) throw Error(Errc::ParamsInvalid, "k must be >= 1");
  if (cpp_int(sumset(A, B).size()) * Kd > cpp_int(Kn) * A.size()) {
    throw Error(Errc::ParamsInvalid, "|A+B| > K|A|");
  }
  if (mode == SearchMode::Exhaustive && A.size() > kExhaustiveLimit) {
    throw Error(Errc::SearchSpaceTooLarge, "exhaustive search needs |A| <= 20");
  }

  const FpSet kB = iterated_sumset(B, params.k);
  const auto elems = A.elements();
  const std::size_t n = elems.size();
  PlunneckeResult result;

  auto subset = [&](std::uint32_t mask) {
    FpSet X(A.field_ptr());
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) X.insert(elems[i]);
    }
    return X;
  };

  if (mode == SearchMode::Exhaustive) {
    for (std::size_t size = n; size >= 1; --size) {
      // Gosper's hack: masks with `size` bits set, ascending.
      std::uint32_t mask = (size == 32) ? ~0U : ((1U << size) - 1);
      const std::uint32_t limit = 1U << n;
      while (mask < limit) {
        ++result.subsets_examined;
        FpSet X = subset(mask);
        if (plunnecke_conclusion_holds(X, A, kB, params)) {
          result.witness = std::move(X);
          return result;
        }
        const std::uint32_t c = mask & (~mask + 1);
        const std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
    }
    result.disproof = true;
    return result;
  }

  // Greedy: peel off the element whose removal shrinks |X + kB| most.
  FpSet X = A;
  while (!X.empty()) {
    ++result.subsets_examined;
    if (plunnecke_conclusion_holds(X, A, kB, params)) {
      result.witness = X;
      return result;
    }
    if (cpp_int(X.size() - 1) * dd < cpp_int(dd - dn) * A.size()) break;
    std::optional<Elem> best;
    std::size_t best_size = 0;
    X.for_each([&](Elem e) {
      FpSet Y(A.field_ptr());
      X.for_each([&](Elem o) {
        if (o != e) Y.insert(o);
      });
      const auto s = sumset(Y, kB).size();
      if (!best || s < best_size) {
        best = e;
        best_size = s;
      }
    });
    FpSet Y(A.field_ptr());
    X.for_each([&](Elem o) {
      if (o != *best) Y.insert(o);
    });
    X = std::move(Y);
  }
  return result;
}

}  // namespace expander
