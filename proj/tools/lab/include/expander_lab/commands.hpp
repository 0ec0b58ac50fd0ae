#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "expander/report_io.hpp"
#include "expander_lab/config.hpp"

namespace expander::lab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;

struct CellKey {
  std::string family;
  std::uint64_t size;
  std::uint64_t seed;
};

/// One quantity evaluation for (family, N, seed) under `cfg`.
GrowthReport run_cell(const ExperimentConfig& cfg, const FieldPtr& F, Family family, std::uint64_t N,
                      std::uint64_t seed, unsigned rep_jobs = 1);

/// All cells of cfg (families x sizes x seeds), evaluated on cfg.jobs
/// workers and returned in cell-key order.
std::vector<GrowthReport> run_cells(const ExperimentConfig& cfg);

/// One fit per family over (size, measured) of every row of that family.
std::vector<FitSummary> fit_by_family(const std::vector<GrowthReport>& reports);

struct Outcome {
  std::vector<GrowthReport> reports;
  std::vector<FitSummary> fits;
  std::string rendered;  // CSV or JSON document
  int exit_code = kExitOk;
};

Outcome check(const ExperimentConfig& cfg);
/// Throws InsufficientData for fewer than three sizes.
Outcome sweep(const ExperimentConfig& cfg);

struct OracleOutcome {
  std::string subject;
  std::uint64_t agreements = 0;
  std::uint64_t disagreements = 0;
  std::vector<std::string> lines;
  int exit_code = kExitOk;
};

/// subject: classify | classify3 | implication | plunnecke | incidence.
OracleOutcome oracle(const std::string& subject, const ExperimentConfig& cfg);

/// Writes the rendered document to cfg.out (atomically) or `out`. Returns the
/// exit code; usage errors are reported on `err` with kExitUsage.
int cmd_check(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const std::string& subject, const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
/// Prints the set for the first (family, size, seed).
int cmd_gen(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
/// construction: cubic | shift. Dumps the instance as JSON with its counts.
int cmd_incidence(const std::string& construction, const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace expander::lab
