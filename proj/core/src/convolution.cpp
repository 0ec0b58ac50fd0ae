#include "expander/freq.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace expander {

FreqVector::FreqVector(FieldPtr field) : field_(std::move(field)), counts_(field_->p(), 0) {}

FreqVector::FreqVector(FieldPtr field, std::vector<Count> counts)
    : field_(std::move(field)), counts_(std::move(counts)) {
  if (counts_.size() != field_->p()) throw Error(Errc::RangeError, "count vector length must equal p");
  for (Count c : counts_) total_ += c;
}

FreqVector FreqVector::indicator(const FpSet& s) {
  std::vector<Count> counts(s.field().p(), 0);
  s.for_each([&](Elem x) { counts[x] = 1; });
  return FreqVector(s.field_ptr(), std::move(counts));
}

FreqVector FreqVector::delta(FieldPtr field, Elem s) {
  std::vector<Count> counts(field->p(), 0);
  counts[s % field->p()] = 1;
  return FreqVector(std::move(field), std::move(counts));
}

std::size_t FreqVector::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(counts_.begin(), counts_.end(), [](Count c) { return c != 0; }));
}

FpSet FreqVector::support() const {
  FpSet s(field_);
  for (Elem x = 0; x < counts_.size(); ++x) {
    if (counts_[x] != 0) s.insert(x);
  }
  return s;
}

Wide energy(const FreqVector& r) {
  Wide e = 0;
  for (Count c : r.counts()) e += static_cast<Wide>(c) * c;
  return e;
}

bool cauchy_schwarz_holds(const FreqVector& r) {
  const Wide total = r.total();
  const Wide sq = total * total;  // total < 2^64
  const Wide support = r.support_size();
  if (support == 0) return total == 0;
  // support * E >= T^2  <=>  E >= ceil(T^2 / support)
  const Wide need = (sq + support - 1) / support;
  return energy(r) >= need;
}

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

/// Number-theoretic transform modulo an NTT-friendly prime below 2^30.
template <u32 Mod, u32 Root>
struct Ntt {
  static void transform(std::vector<u32>& a, bool invert) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
      std::size_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
      u64 w = powmod(Root, (Mod - 1) / len, Mod);
      if (invert) w = powmod(w, Mod - 2, Mod);
      std::vector<u32> tw(len / 2);
      tw[0] = 1;
      for (std::size_t k = 1; k < len / 2; ++k) tw[k] = static_cast<u32>(u64{tw[k - 1]} * w % Mod);
      for (std::size_t i = 0; i < n; i += len) {
        for (std::size_t k = 0; k < len / 2; ++k) {
          const u32 u = a[i + k];
          const u32 v = static_cast<u32>(u64{a[i + k + len / 2]} * tw[k] % Mod);
          a[i + k] = u + v >= Mod ? u + v - Mod : u + v;
          a[i + k + len / 2] = u >= v ? u - v : u + Mod - v;
        }
      }
    }
    if (invert) {
      const u64 n_inv = powmod(n, Mod - 2, Mod);
      for (auto& x : a) x = static_cast<u32>(x * n_inv % Mod);
    }
  }

  /// Linear convolution mod Mod, length `size` (power of two >= |a|+|b|-1).
  static std::vector<u32> linear(std::span<const Count> a, std::span<const Count> b, std::size_t size) {
    std::vector<u32> fa(size, 0), fb(size, 0);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = static_cast<u32>(a[i] % Mod);
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = static_cast<u32>(b[i] % Mod);
    transform(fa, false);
    transform(fb, false);
    for (std::size_t i = 0; i < size; ++i) fa[i] = static_cast<u32>(u64{fa[i]} * fb[i] % Mod);
    transform(fa, true);
    return fa;
  }
};

constexpr u32 kM1 = 998244353, kM2 = 167772161, kM3 = 469762049;

std::vector<Count> ntt_cyclic(std::span<const Count> a, std::span<const Count> b, std::size_t n) {
  const std::size_t size = std::bit_ceil(2 * n - 1);
  const auto r1 = Ntt<kM1, 3>::linear(a, b, size);
  const auto r2 = Ntt<kM2, 3>::linear(a, b, size);
  const auto r3 = Ntt<kM3, 3>::linear(a, b, size);

  // Garner reconstruction; the exact value is below 2^64 < M1*M2*M3.
  constexpr u64 m1_inv_m2 = powmod(kM1, kM2 - 2, kM2);
  constexpr u64 m12_mod_m3 = u64{kM1} * kM2 % kM3;
  constexpr u64 m12_inv_m3 = powmod(m12_mod_m3, kM3 - 2, kM3);
  std::vector<Wide> lin(size);
  for (std::size_t i = 0; i < size; ++i) {
    const u64 x1 = r1[i];
    const u64 t1 = (r2[i] + kM2 - x1 % kM2) % kM2 * m1_inv_m2 % kM2;
    const Wide x12 = x1 + static_cast<Wide>(kM1) * t1;
    const u64 x12_mod_m3 = static_cast<u64>(x12 % kM3);
    const u64 t2 = (r3[i] + kM3 - x12_mod_m3) % kM3 * m12_inv_m3 % kM3;
    lin[i] = x12 + static_cast<Wide>(kM1) * kM2 * t2;
  }
  std::vector<Count> out(n, 0);
  for (std::size_t i = 0; i < size; ++i) {
    if (lin[i] != 0) out[i % n] += static_cast<Count>(lin[i]);
  }
  return out;
}

std::vector<Count> schoolbook_cyclic(std::span<const Count> a, std::span<const Count> b, std::size_t n) {
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] != 0) nz_b.push_back(j);
  }
  std::vector<Count> out(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j : nz_b) {
      std::size_t k = i + j;
      if (k >= n) k -= n;
      out[k] += a[i] * b[j];
    }
  }
  return out;
}

std::size_t nonzeros(std::span<const Count> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Count c) { return c != 0; }));
}

Wide sum(std::span<const Count> v) {
  Wide s = 0;
  for (Count c : v) s += c;
  return s;
}

}  // namespace

std::vector<Count> cyclic_convolve(std::span<const Count> a, std::span<const Count> b, std::size_t n,
                                   ConvAlgo algo) {
  if (a.size() != n || b.size() != n) throw Error(Errc::RangeError, "convolution operands must have length n");
  const Wide sa = sum(a), sb = sum(b);
  const Wide bound = sa * sb;
  if (bound >> 64 != 0) throw Error(Errc::BudgetExceeded, "convolution counts would overflow 64 bits");
  if (n == 0) return {};

  if (algo == ConvAlgo::Auto) {
    const std::size_t size = std::bit_ceil(2 * n - 1);
    const Wide pair_cost = static_cast<Wide>(nonzeros(a)) * nonzeros(b);
    const Wide ntt_cost = static_cast<Wide>(size) * static_cast<Wide>(std::bit_width(size)) * 9;
    algo = pair_cost <= ntt_cost ? ConvAlgo::Schoolbook : ConvAlgo::Ntt;
  }
  auto out = algo == ConvAlgo::Schoolbook ? schoolbook_cyclic(a, b, n) : ntt_cyclic(a, b, n);

  if (algo == ConvAlgo::Ntt) {
    // Reconstruction check: total mass and first moment mod n must match.
    if (sum(out) != bound) throw Error(Errc::InvariantViolated, "NTT convolution lost mass");
    auto moment = [n](std::span<const Count> v) {
      Wide m = 0;
      for (std::size_t i = 0; i < v.size(); ++i) m = (m + static_cast<Wide>(v[i] % n) * i) % n;
      return m;
    };
    const Wide expect = (moment(a) * (sb % n) + moment(b) * (sa % n)) % n;
    if (moment(out) != expect) throw Error(Errc::InvariantViolated, "NTT convolution first moment mismatch");
  }
  return out;
}

FreqVector additive_convolve(const FreqVector& r1, const FreqVector& r2, ConvAlgo algo) {
  if (r1.field().p() != r2.field().p()) throw Error(Errc::FieldMismatch, "additive_convolve across fields");
  return FreqVector(r1.field_ptr(), cyclic_convolve(r1.counts(), r2.counts(), r1.field().p(), algo));
}

FreqVector multiplicative_convolve(const FreqVector& r1, const FreqVector& r2, ConvAlgo algo) {
  if (r1.field().p() != r2.field().p()) throw Error(Errc::FieldMismatch, "multiplicative_convolve across fields");
  const auto& F = r1.field();
  const std::size_t n = F.p() - 1;
  std::vector<Count> l1(n, 0), l2(n, 0);
  for (Elem x = 1; x < F.p(); ++x) {
    l1[F.dlog_index(x)] = r1[x];
    l2[F.dlog_index(x)] = r2[x];
  }
  const auto logs = cyclic_convolve(l1, l2, n, algo);
  std::vector<Count> out(F.p(), 0);
  for (std::size_t i = 0; i < n; ++i) out[F.power_of_generator(i)] = logs[i];
  const Wide zero = static_cast<Wide>(r1[0]) * r2.total() + static_cast<Wide>(r1.total() - r1[0]) * r2[0];
  if (zero >> 64 != 0) throw Error(Errc::BudgetExceeded, "product counts would overflow 64 bits");
  out[0] = static_cast<Count>(zero);
  return FreqVector(r1.field_ptr(), std::move(out));
}

}  // namespace expander
