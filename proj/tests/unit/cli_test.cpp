#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "expander/error.hpp"
#include "expander_lab/commands.hpp"

using namespace expander;
using namespace expander::lab;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("expander_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_set(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args) {
  const std::string cmd = std::string(EXPANDER_LAB_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

ExperimentConfig base(TheoremId id, std::vector<std::uint64_t> sizes) {
  ExperimentConfig cfg;
  cfg.theorem = id;
  cfg.sizes = std::move(sizes);
  return cfg;
}

TEST(Config, Validation) {
  auto cfg = base(TheoremId::CO0, {});
  EXPECT_THROW(validate(cfg), Error);
  cfg.sizes = {0};
  EXPECT_THROW(validate(cfg), Error);
  cfg.sizes = {4};
  EXPECT_NO_THROW(validate(cfg));
  cfg.p = 10;
  EXPECT_THROW(validate(cfg), Error);
  cfg.p = 101;
  cfg.families = {Family::File};
  EXPECT_THROW(validate(cfg), Error);
  cfg.set_file = (scratch() / "missing.txt").string();
  EXPECT_THROW(validate(cfg), Error);
  EXPECT_EQ(parse_size_list("16..256"), (std::vector<std::uint64_t>{16, 32, 64, 128, 256}));
  EXPECT_EQ(parse_size_list("3,5,9"), (std::vector<std::uint64_t>{3, 5, 9}));
  EXPECT_THROW(parse_size_list("3,,5"), Error);
  EXPECT_EQ(parse_rational("10/6"), (Rational{5, 3}));
}

TEST(Config, SizePreconditions) {
  EXPECT_TRUE(size_precondition_ok(TheoremId::MU5, 128, 10007));
  EXPECT_FALSE(size_precondition_ok(TheoremId::MU5, 256, 10007));
  EXPECT_TRUE(size_precondition_ok(TheoremId::MU6A, 100, 10007));
  EXPECT_FALSE(size_precondition_ok(TheoremId::MU6B, 101, 10007));
  EXPECT_FALSE(size_precondition_ok(TheoremId::CO0, 256, 10007));
}

TEST(Check, Co0RandomRows) {
  auto cfg = base(TheoremId::CO0, {16, 32, 64, 128, 256});
  cfg.seeds = {1, 2};
  const auto o = check(cfg);
  EXPECT_EQ(o.exit_code, kExitOk);
  ASSERT_EQ(o.reports.size(), 10u);
  EXPECT_EQ(o.reports[0].size, 16u);
  EXPECT_EQ(o.reports[1].seed, 2u);
  EXPECT_EQ(o.reports.back().size, 256u);
  EXPECT_EQ(o.rendered.rfind("# expander-lab v1\n", 0), 0u);
}

TEST(Check, FileFamilySingleton) {
  auto cfg = base(TheoremId::CO0, {});
  cfg.families = {Family::File};
  cfg.set_file = write_set("zero.txt", "0\n");
  const auto o = check(cfg);
  ASSERT_EQ(o.reports.size(), 1u);
  EXPECT_EQ(o.reports[0].measured, 1u);
  EXPECT_EQ(o.exit_code, kExitOk);
}

TEST(Check, ExitCodesThroughBinary) {
  EXPECT_EQ(run("check --theorem co0 --p 10007 --family random --sizes 16..256"), 0);
  EXPECT_EQ(run("check --theorem mu4 --poly 1,1,0,0,0 --sizes 16"), 1);
  EXPECT_EQ(run("check --theorem co0 --family file --set-file " + write_set("z.txt", "0\n")), 0);
  EXPECT_EQ(run("check --theorem co0 --p 12 --sizes 4"), 1);
  EXPECT_EQ(run("check --theorem nope --sizes 4"), 1);
  EXPECT_EQ(run("check --theorem co0"), 1);
  EXPECT_EQ(run("frobnicate"), 1);
  EXPECT_EQ(run("oracle classify --p 5"), 0);
  EXPECT_EQ(run("oracle classify --p 101"), 1);
  EXPECT_EQ(run("sweep --theorem mu1 --sizes 8,16"), 1);
}

TEST(Sweep, Mu1ReportsSlope) {
  auto cfg = base(TheoremId::MU1, {8, 16, 32, 64});
  const auto o = sweep(cfg);
  ASSERT_EQ(o.fits.size(), 1u);
  EXPECT_EQ(o.fits[0].exponent, (Rational{3, 2}));
  EXPECT_EQ(o.fits[0].points, 4u);
  EXPECT_NE(o.rendered.find("# fit theorem=MU1 family=index points=4"), std::string::npos);
  EXPECT_EQ(o.exit_code, kExitOk);
}

TEST(Sweep, InsufficientData) {
  auto cfg = base(TheoremId::MU1, {8, 16});
  try {
    sweep(cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InsufficientData);
  }
  cfg = base(TheoremId::MU5, {64, 128, 256});
  cfg.respect_preconditions = true;  // 256 fails N^7 <= p^4
  EXPECT_THROW(sweep(cfg), Error);
}

TEST(Sweep, DeterministicAcrossJobs) {
  for (auto id : {TheoremId::MU4, TheoremId::MU6A, TheoremId::THM2STAR}) {
    auto cfg = base(id, {6, 10, 14});
    cfg.families = {Family::Random, Family::ApUnionGp};
    cfg.seeds = {1, 2, 3};
    const auto a = sweep(cfg).rendered;
    cfg.jobs = 4;
    const auto b = sweep(cfg).rendered;
    EXPECT_EQ(a, b);
    cfg.seeds = {1, 2, 4};
    EXPECT_NE(sweep(cfg).rendered, a);
  }
}

TEST(Sweep, AtomicOutputFile) {
  const auto out = scratch() / "sweep.csv";
  EXPECT_EQ(run("sweep --theorem mu1 --sizes 8,16,32 --out " + out.string()), 0);
  const auto first = slurp(out);
  EXPECT_EQ(run("sweep --theorem mu1 --sizes 8,16,32 --jobs 3 --out " + out.string()), 0);
  EXPECT_EQ(slurp(out), first);
  EXPECT_NE(first.find("# fit theorem=MU1"), std::string::npos);
  EXPECT_EQ(run("sweep --theorem mu1 --sizes 8,16,32 --format json --out " + out.string()), 0);
  EXPECT_EQ(slurp(out).front(), '{');
}

TEST(Sweep, EveryTheoremRuns) {
  for (auto id : {TheoremId::CO0, TheoremId::MU4, TheoremId::MU5, TheoremId::MU6A, TheoremId::MU6B,
                  TheoremId::MAYMAY, TheoremId::THM2STAR, TheoremId::BUC1, TheoremId::MU1, TheoremId::MOT,
                  TheoremId::BA, TheoremId::TONGTONG}) {
    auto cfg = base(id, {4, 8, 12});
    cfg.p = 1009;
    const auto o = sweep(cfg);
    EXPECT_EQ(o.exit_code, kExitOk) << to_string(id);
    EXPECT_EQ(o.reports.size(), 3u);
    for (const auto& r : o.reports) EXPECT_GE(r.measured, 1u);
  }
}

TEST(Oracle, Classify) {
  ExperimentConfig cfg;
  cfg.p = 5;
  const auto o = oracle("classify", cfg);
  EXPECT_EQ(o.agreements, 1000u);
  EXPECT_EQ(o.disagreements, 0u);
  cfg.p = 101;
  try {
    oracle("classify", cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ModulusTooLargeForOracle);
  }
}

TEST(Oracle, PlunneckeExample) {
  ExperimentConfig cfg;
  cfg.p = 13;
  cfg.set_file = write_set("abc.json", "[0, 1, 2]");
  cfg.K = "5/3";
  cfg.delta = "1/2";
  cfg.ks = {2};
  const auto o = oracle("plunnecke", cfg);
  EXPECT_EQ(o.agreements, 1u);
  EXPECT_EQ(o.disagreements, 0u);
  EXPECT_EQ(o.exit_code, kExitOk);
  EXPECT_NE(o.lines[0].find("witness=[0, 1, 2]"), std::string::npos) << o.lines[0];
}

TEST(Oracle, IncidenceAndImplication) {
  ExperimentConfig cfg;
  cfg.p = 101;
  cfg.count = 10;
  EXPECT_EQ(oracle("incidence", cfg).disagreements, 0u);
  cfg.p = 7;
  cfg.count = 200;
  EXPECT_EQ(oracle("implication", cfg).disagreements, 0u);
  EXPECT_THROW(oracle("astrology", cfg), Error);
}

TEST(Gen, Families) {
  ExperimentConfig cfg;
  cfg.p = 101;
  cfg.families = {Family::Interval};
  cfg.sizes = {3};
  std::ostringstream out, err;
  EXPECT_EQ(cmd_gen(cfg, out, err), kExitOk);
  EXPECT_EQ(out.str(), "1\n2\n3\n");
}

TEST(CliIncidence, Dump) {
  ExperimentConfig cfg;
  cfg.p = 7;
  cfg.set_file = write_set("zero2.txt", "0\n");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_incidence("cubic", cfg, out, err), kExitOk);
  EXPECT_NE(out.str().find("\"points\":[[0,0,0]]"), std::string::npos);
  EXPECT_NE(err.str().find("incidences=1"), std::string::npos);
  EXPECT_EQ(cmd_incidence("shift", cfg, out, err), kExitOk);
  EXPECT_EQ(cmd_incidence("tetrahedron", cfg, out, err), kExitUsage);
}

}  // namespace
