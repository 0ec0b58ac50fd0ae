#include "expander_lab/config.hpp"

#include <charconv>
#include <filesystem>
#include <numeric>

#include "expander/error.hpp"
#include "expander/field.hpp"

namespace expander::lab {
namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty())
    throw Error(Errc::ConfigInvalid, "bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::int64_t parse_i64(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty())
    throw Error(Errc::ConfigInvalid, "bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  Rational r;
  if (slash == std::string::npos) {
    r = {parse_i64(text, "rational"), 1};
  } else {
    r = {parse_i64(std::string_view(text).substr(0, slash), "numerator"),
         parse_i64(std::string_view(text).substr(slash + 1), "denominator")};
  }
  if (r.den <= 0) throw Error(Errc::ConfigInvalid, "denominator must be positive: " + text);
  const auto g = std::gcd(r.num, r.den);
  if (g > 1) r = {r.num / g, r.den / g};
  return r;
}

std::vector<std::uint64_t> parse_size_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const auto lo = parse_u64(std::string_view(text).substr(0, dots), "size range");
    const auto hi = parse_u64(std::string_view(text).substr(dots + 2), "size range");
    if (lo == 0 || lo > hi) throw Error(Errc::ConfigInvalid, "bad size range: " + text);
    for (std::uint64_t n = lo; n <= hi; n *= 2) out.push_back(n);
    return out;
  }
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    out.push_back(parse_u64(rest.substr(0, comma), "size"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

bool is_index_theorem(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::MU5:
    case TheoremId::MU6A:
    case TheoremId::MU6B:
    case TheoremId::MU1:
      return true;
    default:
      return false;
  }
}

bool size_precondition_ok(TheoremId id, std::uint64_t N, std::uint64_t p) {
  switch (id) {
    case TheoremId::CO0: return pow_le(N, 12, p, 7);
    case TheoremId::MU4:
    case TheoremId::MAYMAY:
    case TheoremId::BUC1: return pow_le(N, 8, p, 5);
    case TheoremId::MU5: return pow_le(N, 7, p, 4);
    case TheoremId::MU6A:
    case TheoremId::MU6B: return pow_le(N, 2, p, 1);
    case TheoremId::MU1: return pow_le(N, 3, p, 2);
    default: return true;
  }
}

void validate(const ExperimentConfig& cfg) {
  PrimeField::make(cfg.p);
  if (cfg.families.empty()) throw Error(Errc::ConfigInvalid, "no family given");
  if (cfg.seeds.empty()) throw Error(Errc::ConfigInvalid, "no seeds given");
  if (cfg.jobs == 0) throw Error(Errc::ConfigInvalid, "--jobs must be at least 1");
  if (cfg.budget == 0) throw Error(Errc::ConfigInvalid, "--budget must be at least 1");
  bool uses_file = false;
  for (auto f : cfg.families) uses_file |= f == Family::File;
  if (uses_file) {
    if (cfg.set_file.empty()) throw Error(Errc::ConfigInvalid, "family=file requires --set-file");
    std::error_code ec;
    if (!std::filesystem::is_regular_file(cfg.set_file, ec))
      throw Error(Errc::ConfigInvalid, "set file not readable: " + cfg.set_file);
  }
  if (!uses_file || cfg.families.size() > 1) {
    if (cfg.sizes.empty()) throw Error(Errc::ConfigInvalid, "--sizes must be nonempty");
    for (auto n : cfg.sizes)
      if (n < 1) throw Error(Errc::ConfigInvalid, "sizes must be >= 1");
  }
}

}  // namespace expander::lab
