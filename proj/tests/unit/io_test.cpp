#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "expander/families.hpp"
#include "expander/report_io.hpp"
#include "expander/set_io.hpp"
#include "oracle.hpp"

using namespace expander;
using oracle::U;

namespace {

TEST(Rng, ReferenceStream) {
  // std::mt19937_64 with the default seed: the 10000th output is fixed by the standard.
  Rng rng(5489);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.next();
  EXPECT_EQ(v, 9981545732273789042ULL);
}

TEST(Rng, BelowIsInRangeAndCoversIt) {
  Rng rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = rng.below(7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
  EXPECT_NE(mix_seed(1, 0), mix_seed(2, 0));
}

TEST(Families, Shapes) {
  auto F = PrimeField::make(101);
  for (auto fam : {Family::Random, Family::Interval, Family::Ap, Family::Gp, Family::ApUnionGp}) {
    for (U n : {1, 5, 50, 100}) {
      const auto s = make_family(F, fam, n, 7);
      EXPECT_EQ(s.size(), n) << to_string(fam);
      EXPECT_EQ(make_family(F, fam, n, 7), s);  // deterministic
    }
    EXPECT_EQ(parse_family(to_string(fam)), fam);
  }
  EXPECT_EQ(make_family(F, Family::Interval, 4, 1).elements(), (std::vector<Elem>{1, 2, 3, 4}));
  EXPECT_EQ(make_family(F, Family::Gp, 3, 1), power_range(F, 1, 3));
  const auto r1 = make_family(F, Family::Random, 20, 1, 0), r2 = make_family(F, Family::Random, 20, 1, 1);
  EXPECT_NE(r1, r2);
  EXPECT_THROW(make_family(F, Family::File, 3, 1), Error);
  EXPECT_THROW(make_family(F, Family::Random, 0, 1), Error);
  EXPECT_THROW(parse_family("bogus"), Error);
}

TEST(Families, ApIsAProgression) {
  auto F = PrimeField::make(101);
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    const auto s = make_family(F, Family::Ap, 10, seed);
    bool found = false;
    for (U a = 0; a < 101 && !found; ++a)
      for (U d = 1; d < 101 && !found; ++d) {
        std::set<U> prog;
        for (U i = 0; i < 10; ++i) prog.insert((a + i * d) % 101);
        found = prog == oracle::to_iset(s);
      }
    EXPECT_TRUE(found) << seed;
  }
}

TEST(SetIo, ParseFormats) {
  auto F = PrimeField::make(7);
  std::vector<std::string> warnings;
  EXPECT_EQ(parse_set(F, "[0, 3, 10]", &warnings).elements(), (std::vector<Elem>{0, 3}));
  EXPECT_EQ(warnings.size(), 1u);  // 10 = 3 mod 7
  warnings.clear();
  EXPECT_EQ(parse_set(F, "# header\n1\n\n-1  \n5 # five\n", &warnings).elements(), (std::vector<Elem>{1, 5, 6}));
  EXPECT_TRUE(warnings.empty());
  for (const char* bad : {"[1, \"x\"]", "1\nfoo\n", "[1, 2", "{\"a\": 1}", "1.5"}) {
    try {
      parse_set(F, bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << bad;
    }
  }
  const FpSet s(F, std::vector<Elem>{6, 2});
  EXPECT_EQ(format_set(s), "2\n6\n");
  EXPECT_EQ(parse_set(F, format_set(s)), s);
}

TEST(ReportIo, CsvLayout) {
  GrowthReport r;
  r.theorem = TheoremId::MU4;
  r.p = 10007;
  r.family = "random";
  r.size = 16;
  r.seed = 3;
  r.measured = 1234;
  r.exponent = {8, 5};
  r.bound_rhs = 84.44850628946524;
  r.constant_ratio = 14.6;
  r.precondition_ok = true;
  EXPECT_EQ(csv_row(r), "MU4,10007,random,16,3,1234,8,5,84.44850629,14.6,1");
  const GrowthReport rows[] = {r};
  const auto csv = to_csv(rows);
  EXPECT_EQ(csv.rfind("# expander-lab v1\ntheorem_id,p,family,size,seed,measured,", 0), 0u);
  FitSummary s{TheoremId::MU4, "random", 5, {1.5, 0.1, 0.01}, {8, 5}};
  EXPECT_NEAR(s.gap(), -0.1, 1e-12);
  EXPECT_EQ(fit_comment(s).rfind("# fit theorem=MU4 family=random points=5 slope=1.500000 exponent=8/5", 0), 0u);
  const FitSummary fits[] = {s};
  const auto json = to_json(rows, fits);
  EXPECT_NE(json.find("\"theorem_id\": \"MU4\""), std::string::npos) << json;
}

TEST(ReportIo, AtomicWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "expander_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.csv").string();
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "second\n");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1u);  // no temp left behind
  std::filesystem::remove_all(dir);
}

}  // namespace
