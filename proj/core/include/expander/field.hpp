#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "expander/error.hpp"

namespace expander {

/// Canonical representative in [0, p).
using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultModulusLimit = std::uint64_t{1} << 20;

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// The prime field F_p together with its smallest primitive root and full
/// power / discrete-log tables. Immutable once built; shared by handle.
class PrimeField {
 public:
  /// Throws NotPrime, ModulusTooSmall (p < 5) or ModulusTooLarge (p > limit).
  static std::shared_ptr<const PrimeField> make(std::uint64_t p,
                                                std::uint64_t limit = kDefaultModulusLimit);

  Elem p() const noexcept { return p_; }
  Elem generator() const noexcept { return h_; }

  Elem reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(std::uint64_t{a} * b % p_);
  }
  Elem pow(Elem base, std::uint64_t e) const noexcept;

  /// Throws DivisionByZero for x = 0.
  Elem inv(Elem x) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// h^i for any i >= 0 (table lookup, exponent taken mod p-1).
  Elem power_of_generator(std::uint64_t i) const noexcept {
    return pow_table_[i % (p_ - 1)];
  }
  /// Discrete log in [1, p-1]; dlog(1) = p-1. Throws DivisionByZero for 0.
  std::uint32_t dlog(Elem x) const;
  /// Same as dlog but reduced into [0, p-2]; used for exponent-indexed arrays.
  std::uint32_t dlog_index(Elem x) const noexcept { return dlog_table_[x] % (p_ - 1); }

 private:
  PrimeField(Elem p, Elem h);

  Elem p_;
  Elem h_;
  std::vector<Elem> pow_table_;           // pow_table_[i] = h^i, i in [0, p-2]
  std::vector<std::uint32_t> dlog_table_;  // dlog_table_[h^i] = i in [1, p-1]
};

using FieldPtr = std::shared_ptr<const PrimeField>;

/// Smallest primitive root of F_p* via x^((p-1)/q) != 1 for every prime q | p-1.
Elem smallest_primitive_root(std::uint64_t p);

}  // namespace expander
