#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "expander/field.hpp"
#include "expander/fpset.hpp"

namespace expander {

using Count = std::uint64_t;
__extension__ typedef unsigned __int128 Wide;

/// Exact representation counts r(c) for every c in F_p.
class FreqVector {
 public:
  explicit FreqVector(FieldPtr field);
  FreqVector(FieldPtr field, std::vector<Count> counts);

  static FreqVector indicator(const FpSet& s);
  /// Point mass of weight 1 at s.
  static FreqVector delta(FieldPtr field, Elem s);

  const PrimeField& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::span<const Count> counts() const noexcept { return counts_; }
  Count operator[](Elem c) const noexcept { return counts_[c]; }
  Count total() const noexcept { return total_; }

  std::size_t support_size() const noexcept;
  FpSet support() const;

  bool operator==(const FreqVector& other) const noexcept {
    return field_->p() == other.field_->p() && counts_ == other.counts_;
  }

 private:
  FieldPtr field_;
  std::vector<Count> counts_;
  Count total_ = 0;
};

/// Sum over c of r(c)^2: the number of pairs of tuples with equal value.
Wide energy(const FreqVector& r);

/// support * energy >= total^2, evaluated exactly.
bool cauchy_schwarz_holds(const FreqVector& r);

enum class ConvAlgo { Auto, Schoolbook, Ntt };

/// out[c] = sum_t a[t] * b[(c - t) mod n]. Exact; throws BudgetExceeded if the
/// largest possible entry (sum a * sum b) does not fit in 64 bits.
std::vector<Count> cyclic_convolve(std::span<const Count> a, std::span<const Count> b, std::size_t n,
                                   ConvAlgo algo = ConvAlgo::Auto);

/// Counts of x + y where x ~ r1, y ~ r2.
FreqVector additive_convolve(const FreqVector& r1, const FreqVector& r2, ConvAlgo algo = ConvAlgo::Auto);
/// Counts of x * y where x ~ r1, y ~ r2 (nonzero part via discrete logs).
FreqVector multiplicative_convolve(const FreqVector& r1, const FreqVector& r2,
                                   ConvAlgo algo = ConvAlgo::Auto);

/// Counts of fn(x) where x ~ r.
template <class Fn>
FreqVector pushforward(const FreqVector& r, Fn&& fn) {
  std::vector<Count> out(r.field().p(), 0);
  for (Elem x = 0; x < r.field().p(); ++x) {
    if (r[x] != 0) out[fn(x)] += r[x];
  }
  return FreqVector(r.field_ptr(), std::move(out));
}

}  // namespace expander
