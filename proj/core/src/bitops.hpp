#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace expander::detail {

inline std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }

/// Bits [pos, pos + 64) of src; storage past the logical end must be zero.
inline std::uint64_t extract64(std::span<const std::uint64_t> src, std::size_t pos) {
  const std::size_t w = pos >> 6;
  const unsigned off = pos & 63;
  std::uint64_t lo = w < src.size() ? src[w] : 0;
  if (off == 0) return lo;
  std::uint64_t hi = w + 1 < src.size() ? src[w + 1] : 0;
  return (lo >> off) | (hi << (64 - off));
}

/// dst[dst_off + i] |= src[src_off + i] for i in [0, len).
inline void or_range(std::span<std::uint64_t> dst, std::size_t dst_off,
                     std::span<const std::uint64_t> src, std::size_t src_off, std::size_t len) {
  std::size_t k = 0;
  while (k < len) {
    const std::size_t dpos = dst_off + k;
    const unsigned doff = dpos & 63;
    const std::size_t take = std::min<std::size_t>(64 - doff, len - k);
    std::uint64_t bits = extract64(src, src_off + k);
    if (take < 64) bits &= (std::uint64_t{1} << take) - 1;
    dst[dpos >> 6] |= bits << doff;
    k += take;
  }
}

/// dst |= rotate(src, shift) inside Z_n: bit i of src lands on (i + shift) mod n.
inline void or_rotated(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::size_t n,
                       std::size_t shift) {
  shift %= n;
  or_range(dst, shift, src, 0, n - shift);
  if (shift != 0) or_range(dst, 0, src, n - shift, shift);
}

/// Cyclic sumset in Z_n of two bit vectors: OR of rotations of `wide` by each
/// set position of `narrow`.
inline std::vector<std::uint64_t> cyclic_sumset_rotate(std::span<const std::uint64_t> narrow,
                                                       std::span<const std::uint64_t> wide,
                                                       std::size_t n) {
  std::vector<std::uint64_t> out(word_count(n), 0);
  for (std::size_t i = 0; i < narrow.size(); ++i) {
    std::uint64_t w = narrow[i];
    while (w != 0) {
      const std::size_t s = i * 64 + static_cast<std::size_t>(__builtin_ctzll(w));
      or_rotated(out, wide, n, s);
      w &= w - 1;
    }
  }
  return out;
}

inline std::size_t popcount(std::span<const std::uint64_t> w) {
  std::size_t c = 0;
  for (auto x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
  return c;
}

}  // namespace expander::detail
