#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "expander/error.hpp"
#include "expander_lab/commands.hpp"

using namespace expander;
using namespace expander::lab;

namespace {

struct RawFlags {
  std::string theorem = "co0";
  std::string family = "random";
  std::string sizes;
  std::vector<std::uint64_t> seeds;
  std::string format = "csv";
  std::string subject;
  std::string construction;
  std::vector<unsigned> ks;
};

void add_common(CLI::App* sub, ExperimentConfig& cfg, RawFlags& raw) {
  sub->add_option("--p", cfg.p, "prime modulus")->capture_default_str();
  sub->add_option("--family", raw.family, "random|interval|ap|gp|ap_union_gp|file (comma list)")
      ->capture_default_str();
  sub->add_option("--sizes", raw.sizes, "comma list, or lo..hi doubling");
  sub->add_option("--seeds", raw.seeds, "seed list")->delimiter(',');
  sub->add_option("--poly", cfg.poly, "bivariate quadratic a,b,c,d,e[,c0]")->capture_default_str();
  sub->add_option("--upoly", cfg.upoly, "univariate quadratic a,d[,c0]")->capture_default_str();
  sub->add_option("--budget", cfg.budget, "max tuple evaluations per representation function")
      ->capture_default_str();
  sub->add_option("--out", cfg.out, "output file (written atomically); default stdout");
  sub->add_option("--format", raw.format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  sub->add_option("--set-file", cfg.set_file, "set file for family=file (and oracle/incidence inputs)");
  sub->add_option("--set-file-b", cfg.set_file_b, "second set file");
}

ExperimentConfig finish(ExperimentConfig cfg, const RawFlags& raw) {
  cfg.theorem = parse_theorem(raw.theorem);
  cfg.families.clear();
  std::string_view rest = raw.family;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    cfg.families.push_back(parse_family(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (!raw.sizes.empty()) cfg.sizes = parse_size_list(raw.sizes);
  if (!raw.seeds.empty()) cfg.seeds = raw.seeds;
  if (!raw.ks.empty()) cfg.ks = raw.ks;
  cfg.format = raw.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expander-lab: growth experiments for polynomial expanders over prime fields"};
  app.require_subcommand(1);
  ExperimentConfig cfg;
  RawFlags raw;

  auto* check = app.add_subcommand("check", "one report row per (family, size, seed)");
  auto* sweep = app.add_subcommand("sweep", "check plus a fitted log-log slope per family");
  for (auto* sub : {check, sweep}) {
    add_common(sub, cfg, raw);
    sub->add_option("--theorem", raw.theorem, "co0|mu4|mu5|mu6a|mu6b|maymay|thm2star|buc1|mu1|mot|ba|tongtong")
        ->capture_default_str();
    sub->add_flag("--respect-preconditions", cfg.respect_preconditions,
                  "drop sizes violating the theorem's size condition");
  }

  auto* oracle = app.add_subcommand("oracle", "cross-check fast paths against exhaustive oracles");
  add_common(oracle, cfg, raw);
  oracle->add_option("subject", raw.subject, "classify|classify3|implication|plunnecke|incidence")->required();
  oracle->add_option("--count", cfg.count, "number of random samples");
  oracle->add_option("--K", cfg.K, "doubling constant a/b (default |A+B|/|A|)");
  oracle->add_option("--delta", cfg.delta, "Plunnecke delta a/b")->capture_default_str();
  oracle->add_option("--k", raw.ks, "iterated sumset orders")->delimiter(',');

  auto* gen = app.add_subcommand("gen", "print a generated set");
  add_common(gen, cfg, raw);

  auto* inc = app.add_subcommand("incidence", "dump a point-plane instance as JSON");
  add_common(inc, cfg, raw);
  inc->add_option("construction", raw.construction, "cubic|shift")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  ExperimentConfig full;
  try {
    full = finish(cfg, raw);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (*check) return cmd_check(full, std::cout, std::cerr);
  if (*sweep) return cmd_sweep(full, std::cout, std::cerr);
  if (*oracle) return cmd_oracle(raw.subject, full, std::cout, std::cerr);
  if (*gen) return cmd_gen(full, std::cout, std::cerr);
  return cmd_incidence(raw.construction, full, std::cout, std::cerr);
}
