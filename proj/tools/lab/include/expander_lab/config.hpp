#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expander/families.hpp"
#include "expander/growth.hpp"

namespace expander::lab {

enum class OutputFormat { Csv, Json };

struct ExperimentConfig {
  std::uint64_t p = 10007;
  TheoremId theorem = TheoremId::CO0;
  std::vector<Family> families{Family::Random};
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> seeds{1};
  std::string poly = "0,0,1,0,0";  // a,b,c,d,e[,c0]; default xy
  std::string upoly = "1,0";       // a,d[,c0];     default u^2
  std::uint64_t budget = kDefaultBudget;
  std::string out;                 // empty: stdout
  OutputFormat format = OutputFormat::Csv;
  unsigned jobs = 1;
  std::string set_file;            // family=file
  std::string set_file_b;          // second set (oracle plunnecke / incidence)
  bool respect_preconditions = false;

  // oracle subjects
  std::uint64_t count = 0;  // 0: subject default
  std::string K;            // "num/den"; empty: |A+B|/|A|
  std::string delta = "1/2";
  std::vector<unsigned> ks{2};
};

/// Throws ConfigInvalid on empty sizes, sizes < 1, empty seeds, jobs = 0, or
/// family=file without a set file; make_field errors propagate.
void validate(const ExperimentConfig& cfg);

/// Parses "a/b" or "a".
Rational parse_rational(const std::string& text);
/// Parses "16,32,64" or a range "16..256" (powers of two between the ends).
std::vector<std::uint64_t> parse_size_list(const std::string& text);

/// Conditions that depend on the size parameter alone (|A| = N or the index
/// bound N): e.g. N^12 <= p^7 for CO0.
bool size_precondition_ok(TheoremId id, std::uint64_t N, std::uint64_t p);

/// Theorems parameterised by an index bound N rather than a set.
bool is_index_theorem(TheoremId id) noexcept;

}  // namespace expander::lab
