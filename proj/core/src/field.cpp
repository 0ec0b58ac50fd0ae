#include "expander/field.hpp"

#include <array>
#include <string>

namespace expander {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ModulusTooSmall: return "ModulusTooSmall";
    case Errc::ModulusTooLarge: return "ModulusTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::RangeError: return "RangeError";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::DegenerateQuadratic: return "DegenerateQuadratic";
    case Errc::PolynomialDegenerate: return "PolynomialDegenerate";
    case Errc::ModulusTooLargeForOracle: return "ModulusTooLargeForOracle";
    case Errc::ParamsInvalid: return "ParamsInvalid";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::ParseError: return "ParseError";
    case Errc::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are deterministic for all n < 3.3e24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Elem smallest_primitive_root(u64 p) {
  const auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return static_cast<Elem>(g);
  }
  throw Error(Errc::NotPrime, "no primitive root for " + std::to_string(p));
}

FieldPtr PrimeField::make(u64 p, u64 limit) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p < 5) throw Error(Errc::ModulusTooSmall, "modulus must be at least 5, got " + std::to_string(p));
  if (p > limit) {
    throw Error(Errc::ModulusTooLarge,
                std::to_string(p) + " exceeds the table limit " + std::to_string(limit));
  }
  const Elem h = smallest_primitive_root(p);
  return FieldPtr(new PrimeField(static_cast<Elem>(p), h));
}

PrimeField::PrimeField(Elem p, Elem h) : p_(p), h_(h), pow_table_(p - 1), dlog_table_(p, 0) {
  Elem x = 1;
  for (Elem i = 0; i + 1 < p; ++i) {
    pow_table_[i] = x;
    dlog_table_[x] = i == 0 ? p - 1 : i;
    x = mul(x, h);
  }
}

Elem PrimeField::pow(Elem base, u64 e) const noexcept {
  return static_cast<Elem>(powmod(base, e, p_));
}

Elem PrimeField::inv(Elem x) const {
  if (x % p_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return pow_table_[(p_ - 1 - dlog_index(x % p_)) % (p_ - 1)];
}

std::uint32_t PrimeField::dlog(Elem x) const {
  if (x % p_ == 0) throw Error(Errc::DivisionByZero, "discrete log of zero");
  return dlog_table_[x % p_];
}

}  // namespace expander
