#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "expander/fpset.hpp"

namespace expander {

/// Seedable generator with a platform-independent output sequence: the raw
/// std::mt19937_64 stream (fixed by the standard) plus our own bounded draw,
/// since the std distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0. Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; derives independent per-stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

enum class Family { Random, Interval, Ap, Gp, ApUnionGp, File };

std::string_view to_string(Family f) noexcept;
/// Throws ConfigInvalid.
Family parse_family(std::string_view name);

/// Builds an N-element set of the given family. Random, Ap and ApUnionGp use
/// the seed (mixed with `stream`); Interval is {1..N}; Gp is h^[1..N].
/// Throws RangeError if N is 0 or too large for the family, ConfigInvalid for File.
FpSet make_family(const FieldPtr& F, Family family, std::uint64_t N, std::uint64_t seed, std::uint64_t stream = 0);

/// N distinct uniform elements of F_p.
FpSet random_subset(const FieldPtr& F, std::uint64_t N, Rng& rng);

}  // namespace expander
