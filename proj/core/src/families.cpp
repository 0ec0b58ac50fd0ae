#include "expander/families.hpp"

#include <string>

#include "expander/freq.hpp"

namespace expander {

std::uint64_t Rng::below(std::uint64_t n) {
  using u128 = Wide;
  std::uint64_t x = next();
  u128 m = static_cast<u128>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      x = next();
      m = static_cast<u128>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Random: return "random";
    case Family::Interval: return "interval";
    case Family::Ap: return "ap";
    case Family::Gp: return "gp";
    case Family::ApUnionGp: return "ap_union_gp";
    case Family::File: return "file";
  }
  return "random";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::Random, Family::Interval, Family::Ap, Family::Gp, Family::ApUnionGp, Family::File}) {
    if (name == to_string(f)) return f;
  }
  throw Error(Errc::ConfigInvalid, "unknown family '" + std::string(name) + "'");
}

FpSet random_subset(const FieldPtr& F, std::uint64_t N, Rng& rng) {
  if (N > F->p()) throw Error(Errc::RangeError, "random subset larger than the field");
  FpSet s(F);
  while (s.size() < N) s.insert(static_cast<Elem>(rng.below(F->p())));
  return s;
}

namespace {

FpSet arithmetic_progression(const FieldPtr& F, std::uint64_t N, Rng& rng) {
  const Elem start = static_cast<Elem>(rng.below(F->p()));
  const Elem step = static_cast<Elem>(1 + rng.below(F->p() - 1));
  FpSet s(F);
  Elem x = start;
  for (std::uint64_t i = 0; i < N; ++i) {
    s.insert(x);
    x = F->add(x, step);
  }
  return s;
}

}  // namespace

FpSet make_family(const FieldPtr& F, Family family, std::uint64_t N, std::uint64_t seed, std::uint64_t stream) {
  if (N == 0) throw Error(Errc::RangeError, "family size must be >= 1");
  Rng rng(mix_seed(seed, stream));
  switch (family) {
    case Family::Random:
      return random_subset(F, N, rng);
    case Family::Interval:
      if (N > F->p()) throw Error(Errc::RangeError, "interval longer than the field");
      return integer_range(F, 1, static_cast<std::int64_t>(N));
    case Family::Ap:
      if (N > F->p()) throw Error(Errc::RangeError, "progression longer than the field");
      return arithmetic_progression(F, N, rng);
    case Family::Gp:
      return power_range(F, 1, N);
    case Family::ApUnionGp: {
      if (N > F->p()) throw Error(Errc::RangeError, "family larger than the field");
      FpSet s = arithmetic_progression(F, (N + 1) / 2, rng);
      for (std::uint64_t i = 1; s.size() < N && i < F->p(); ++i) s.insert(F->power_of_generator(i));
      if (s.size() < N) s.insert(0);
      return s;
    }
    case Family::File:
      break;
  }
  throw Error(Errc::ConfigInvalid, "family 'file' needs a set file");
}

}  // namespace expander
