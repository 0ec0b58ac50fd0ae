#include "expander/fpset.hpp"

#include <string>

#include "bitops.hpp"
#include "expander/poly.hpp"

namespace expander {

FpSet::FpSet(FieldPtr field) : field_(std::move(field)), bits_(detail::word_count(field_->p()), 0) {}

FpSet::FpSet(FieldPtr field, std::span<const Elem> elements) : FpSet(std::move(field)) {
  for (Elem x : elements) insert(x % field_->p());
}

FpSet FpSet::from_integers(FieldPtr field, std::span<const std::int64_t> values) {
  FpSet s(std::move(field));
  for (auto v : values) s.insert(s.field().reduce(v));
  return s;
}

FpSet FpSet::from_words(FieldPtr field, std::vector<std::uint64_t> words) {
  FpSet s(std::move(field));
  s.bits_ = std::move(words);
  s.count_ = detail::popcount(s.bits_);
  return s;
}

std::vector<Elem> FpSet::elements() const {
  std::vector<Elem> out;
  out.reserve(count_);
  for_each([&](Elem x) { out.push_back(x); });
  return out;
}

bool FpSet::is_subset_of(const FpSet& other) const {
  require_same_field(*this, other);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if ((bits_[i] & ~other.bits_[i]) != 0) return false;
  }
  return true;
}

bool FpSet::operator==(const FpSet& other) const noexcept {
  return field_->p() == other.field_->p() && bits_ == other.bits_;
}

void require_same_field(const FpSet& a, const FpSet& b) {
  if (a.field_ptr() != b.field_ptr() && a.field().p() != b.field().p()) {
    throw Error(Errc::FieldMismatch, "sets over F_" + std::to_string(a.field().p()) + " and F_" +
                                         std::to_string(b.field().p()));
  }
}

namespace {

bool prefer_pairs(std::size_t na, std::size_t nb, std::size_t n) {
  // Pairs cost na*nb; rotation costs min(na, nb) * n/64 word operations (x2).
  return std::max(na, nb) * 32 < n;
}

}  // namespace

FpSet sumset(const FpSet& a, const FpSet& b, SumsetAlgo algo) {
  require_same_field(a, b);
  const auto& F = a.field();
  if (a.empty() || b.empty()) return FpSet(a.field_ptr());
  if (algo == SumsetAlgo::Pairs || (algo == SumsetAlgo::Auto && prefer_pairs(a.size(), b.size(), F.p()))) {
    FpSet out(a.field_ptr());
    const auto eb = b.elements();
    a.for_each([&](Elem x) {
      for (Elem y : eb) out.insert(F.add(x, y));
    });
    return out;
  }
  const bool a_narrow = a.size() <= b.size();
  auto words = detail::cyclic_sumset_rotate(a_narrow ? a.words() : b.words(),
                                            a_narrow ? b.words() : a.words(), F.p());
  return FpSet::from_words(a.field_ptr(), std::move(words));
}

FpSet difference_set(const FpSet& a, const FpSet& b, SumsetAlgo algo) {
  return sumset(a, negate(b), algo);
}

FpSet product_set(const FpSet& a, const FpSet& b, SumsetAlgo algo) {
  require_same_field(a, b);
  const auto& F = a.field();
  FpSet out(a.field_ptr());
  if (a.empty() || b.empty()) return out;
  if (a.contains(0) || b.contains(0)) out.insert(0);

  const std::size_t n = F.p() - 1;
  if (algo == SumsetAlgo::Pairs || (algo == SumsetAlgo::Auto && prefer_pairs(a.size(), b.size(), n))) {
    const auto eb = b.elements();
    a.for_each([&](Elem x) {
      for (Elem y : eb) out.insert(F.mul(x, y));
    });
    return out;
  }
  // Nonzero parts multiply as a cyclic sumset of discrete logs in Z_{p-1}.
  std::vector<std::uint64_t> la(detail::word_count(n), 0), lb(detail::word_count(n), 0);
  auto to_logs = [&](const FpSet& s, std::vector<std::uint64_t>& w) {
    s.for_each([&](Elem x) {
      if (x == 0) return;
      const auto i = F.dlog_index(x);
      w[i >> 6] |= std::uint64_t{1} << (i & 63);
    });
  };
  to_logs(a, la);
  to_logs(b, lb);
  const auto logs = detail::cyclic_sumset_rotate(la, lb, n);
  for (std::size_t i = 0; i < logs.size(); ++i) {
    std::uint64_t w = logs[i];
    while (w != 0) {
      out.insert(F.power_of_generator(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w))));
      w &= w - 1;
    }
  }
  return out;
}

FpSet iterated_sumset(const FpSet& b, unsigned k) {
  FpSet acc(b.field_ptr());
  acc.insert(0);
  for (unsigned i = 0; i < k; ++i) acc = sumset(acc, b);
  return acc;
}

FpSet negate(const FpSet& a) {
  FpSet out(a.field_ptr());
  a.for_each([&](Elem x) { out.insert(a.field().neg(x)); });
  return out;
}

FpSet translate(const FpSet& a, Elem t) {
  FpSet out(a.field_ptr());
  a.for_each([&](Elem x) { out.insert(a.field().add(x, t)); });
  return out;
}

FpSet scale(const FpSet& a, Elem lambda) {
  FpSet out(a.field_ptr());
  a.for_each([&](Elem x) { out.insert(a.field().mul(x, lambda)); });
  return out;
}

FpSet dilate_power(const FpSet& a, unsigned e) {
  if (e == 0) throw Error(Errc::RangeError, "dilate_power exponent must be >= 1");
  FpSet out(a.field_ptr());
  a.for_each([&](Elem x) { out.insert(a.field().pow(x, e)); });
  return out;
}

FpSet image_unary(const UniQuad& f, const FpSet& a) {
  FpSet out(a.field_ptr());
  a.for_each([&](Elem x) { out.insert(f(a.field(), x)); });
  return out;
}

FpSet image_binary(const Quad2& g, const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  FpSet out(a.field_ptr());
  const auto eb = b.elements();
  a.for_each([&](Elem x) {
    for (Elem y : eb) out.insert(g(a.field(), x, y));
  });
  return out;
}

FpSet power_range(const FieldPtr& field, std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1 || lo > hi || hi > field->p() - 1) {
    throw Error(Errc::RangeError, "power_range needs 1 <= lo <= hi <= p-1, got [" + std::to_string(lo) +
                                      ", " + std::to_string(hi) + "]");
  }
  FpSet out(field);
  for (std::uint64_t i = lo; i <= hi; ++i) out.insert(field->power_of_generator(i));
  return out;
}

FpSet integer_range(const FieldPtr& field, std::int64_t lo, std::int64_t hi) {
  FpSet out(field);
  for (std::int64_t i = lo; i <= hi; ++i) out.insert(field->reduce(i));
  return out;
}

}  // namespace expander
