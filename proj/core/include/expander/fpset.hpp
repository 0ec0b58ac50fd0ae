#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "expander/field.hpp"

namespace expander {

struct Quad2;
struct UniQuad;

/// A subset of F_p stored as a characteristic bit vector of length p.
class FpSet {
 public:
  explicit FpSet(FieldPtr field);
  FpSet(FieldPtr field, std::span<const Elem> elements);

  /// Reduces every integer mod p. Duplicates collapse.
  static FpSet from_integers(FieldPtr field, std::span<const std::int64_t> values);

  const PrimeField& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }

  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool contains(Elem x) const noexcept { return (bits_[x >> 6] >> (x & 63)) & 1U; }

  void insert(Elem x) noexcept {
    std::uint64_t& w = bits_[x >> 6];
    const std::uint64_t m = std::uint64_t{1} << (x & 63);
    count_ += (w & m) == 0;
    w |= m;
  }

  /// Ascending order.
  std::vector<Elem> elements() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      std::uint64_t w = bits_[i];
      while (w != 0) {
        fn(static_cast<Elem>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w))));
        w &= w - 1;
      }
    }
  }

  bool is_subset_of(const FpSet& other) const;
  bool operator==(const FpSet& other) const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return bits_; }

  /// Builds from raw words; bits at positions >= p must be clear.
  static FpSet from_words(FieldPtr field, std::vector<std::uint64_t> words);

 private:
  FieldPtr field_;
  std::vector<std::uint64_t> bits_;
  std::size_t count_ = 0;
};

enum class SumsetAlgo { Auto, Pairs, Rotate };

/// Throws FieldMismatch when the operands live over different fields.
void require_same_field(const FpSet& a, const FpSet& b);

FpSet sumset(const FpSet& a, const FpSet& b, SumsetAlgo algo = SumsetAlgo::Auto);
FpSet difference_set(const FpSet& a, const FpSet& b, SumsetAlgo algo = SumsetAlgo::Auto);
FpSet product_set(const FpSet& a, const FpSet& b, SumsetAlgo algo = SumsetAlgo::Auto);
/// B + B + ... + B (k copies); k = 0 gives {0}.
FpSet iterated_sumset(const FpSet& b, unsigned k);

FpSet negate(const FpSet& a);
FpSet translate(const FpSet& a, Elem t);
FpSet scale(const FpSet& a, Elem lambda);
/// {a^e : a in A}; e >= 1.
FpSet dilate_power(const FpSet& a, unsigned e);
FpSet image_unary(const UniQuad& f, const FpSet& a);
FpSet image_binary(const Quad2& g, const FpSet& a, const FpSet& b);

/// {h^x : lo <= x <= hi}; requires 1 <= lo <= hi <= p-1 (RangeError).
FpSet power_range(const FieldPtr& field, std::uint64_t lo, std::uint64_t hi);
/// Integers lo..hi reduced mod p.
FpSet integer_range(const FieldPtr& field, std::int64_t lo, std::int64_t hi);

}  // namespace expander
