#include <gtest/gtest.h>

#include <cmath>

#include "expander/families.hpp"
#include "expander/fit.hpp"
#include "expander/growth.hpp"
#include "expander/plunnecke.hpp"
#include "oracle.hpp"

using namespace expander;
using oracle::ISet;
using oracle::U;

namespace {

FpSet S(const FieldPtr& F, std::vector<Elem> xs) { return FpSet(F, xs); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvariantViolated;
}

void expect_hard_ok(const GrowthReport& r) {
  for (const auto& c : r.checks) EXPECT_TRUE(c.skipped || c.passed) << to_string(r.theorem) << ": " << c.name << " " << c.detail;
}

TEST(Growth, CubicIdentity) {
  for (U p : {5, 7, 101}) EXPECT_EQ(cubic_identity_failures(*PrimeField::make(p)), 0u);
}

TEST(Growth, Exponents) {
  EXPECT_EQ(theorem_exponent(TheoremId::CO0), (Rational{8, 7}));
  EXPECT_EQ(theorem_exponent(TheoremId::MU4), (Rational{8, 5}));
  EXPECT_EQ(theorem_exponent(TheoremId::MU5), (Rational{7, 4}));
  EXPECT_EQ(theorem_exponent(TheoremId::MU6A), (Rational{2, 1}));
  EXPECT_EQ(theorem_exponent(TheoremId::MU6B), (Rational{2, 1}));
  EXPECT_EQ(theorem_exponent(TheoremId::MAYMAY), (Rational{6, 5}));
  EXPECT_EQ(theorem_exponent(TheoremId::BUC1), (Rational{6, 5}));
  EXPECT_EQ(theorem_exponent(TheoremId::MU1), (Rational{3, 2}));
  EXPECT_EQ(parse_theorem("mu6a"), TheoremId::MU6A);
  EXPECT_EQ(code_of([] { parse_theorem("nope"); }), Errc::ConfigInvalid);
}

TEST(Growth, ExactComparisons) {
  // 7^12 = 13841287201 <= 10007^7, and the float-borderline 2^12 vs 4096^1
  EXPECT_TRUE(pow_le(7, 12, 10007, 7));
  EXPECT_TRUE(pow_le(2, 12, 4096, 1));
  EXPECT_FALSE(pow_le(2, 12, 4095, 1));
  EXPECT_TRUE(pow_le(1000000, 7, 1000000, 7));
  for (Wide n : {Wide{0}, Wide{1}, Wide{2}, Wide{4}, Wide{5}, Wide{1} << 80, (Wide{1} << 80) + 1}) {
    const Wide r = isqrt_ceil(n);
    EXPECT_TRUE(r * r >= n);
    if (r > 0) EXPECT_TRUE((r - 1) * (r - 1) < n);
  }
}

TEST(Growth, Co0) {
  auto F = PrimeField::make(7);
  EXPECT_EQ(quantity_co0(S(F, {0})).measured, 1u);
  const auto r = quantity_co0(S(F, {0, 1}));
  // oracle: (a-b)^3 + (c-d)^3 over {0,1}^4
  const auto h = oracle::enumerate({{0, 1}, {0, 1}, {0, 1}, {0, 1}}, [](const std::vector<U>& t) {
    return (oracle::powm((t[0] + 7 - t[1]) % 7, 3, 7) + oracle::powm((t[2] + 7 - t[3]) % 7, 3, 7)) % 7;
  });
  EXPECT_EQ(r.measured, h.size());
  EXPECT_EQ(r.measured, 5u);
  expect_hard_ok(r);
  auto G = PrimeField::make(10007);
  Rng rng(1);
  const auto A = random_subset(G, 20, rng);
  const auto base = quantity_co0(A).measured;
  for (Elem t : {1u, 17u, 5003u}) EXPECT_EQ(quantity_co0(translate(A, t)).measured, base);
  EXPECT_FALSE(quantity_co0(random_subset(G, 256, rng)).precondition_ok);
  EXPECT_TRUE(quantity_co0(random_subset(G, 128, rng)).precondition_ok);
}

TEST(Growth, Thm2star) {
  auto F = PrimeField::make(7);
  EXPECT_EQ(quantity_thm2star(S(F, {0}), S(F, {0})).measured, 1u);
  // (b-a)^3 + a^3 over {0,1}^2 only takes the values 0 and 1
  const auto r = quantity_thm2star(S(F, {0, 1}), S(F, {0}));
  EXPECT_EQ(r.measured, 2u);
  expect_hard_ok(r);
  auto G = PrimeField::make(257);
  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    const auto A = random_subset(G, 1 + rng.below(6), rng);
    const auto X = random_subset(G, 1 + rng.below(4), rng);
    const auto rep = quantity_thm2star(A, X);
    const auto h = oracle::enumerate({oracle::vec(A), oracle::vec(A), oracle::vec(X)}, [](const std::vector<U>& v) {
      return (oracle::powm((v[1] + 257 - v[0]) % 257, 3, 257) + oracle::powm(v[0], 3, 257) + v[2]) % 257;
    });
    EXPECT_EQ(rep.measured, h.size());
    expect_hard_ok(rep);
  }
}

TEST(Growth, Mu4) {
  auto F = PrimeField::make(11);
  const UniQuad sq{1, 0, 0};
  const Quad2 xy{0, 0, 1, 0, 0, 0};
  EXPECT_EQ(quantity_mu4(S(F, {0}), sq, xy).measured, 1u);
  const auto r = quantity_mu4(S(F, {1, 2}), sq, xy);
  ISet fa_a = oracle::pairwise({1, 4}, {1, 2}, [](U x, U y) { return (x + y) % 11; });
  EXPECT_EQ(fa_a, (ISet{2, 3, 5, 6}));
  const auto want = oracle::pairwise(fa_a, {1, 2, 4}, [](U x, U y) { return (x + y) % 11; });
  EXPECT_EQ(r.measured, want.size());
  expect_hard_ok(r);
  EXPECT_EQ(code_of([&] { quantity_mu4(S(F, {1, 2}), sq, Quad2{1, 1, 0, 0, 0, 0}); }), Errc::PolynomialDegenerate);
}

TEST(Growth, Mu5) {
  auto F = PrimeField::make(11);
  const Quad2 zt{0, 0, 1, 0, 0, 0};
  EXPECT_EQ(quantity_mu5(F, 1, zt).measured, 1u);
  ASSERT_EQ(F->generator(), 2u);
  const auto r = quantity_mu5(F, 3, zt);
  const auto h = oracle::enumerate({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}}, [](const std::vector<U>& t) {
    return (oracle::powm(2, t[0], 11) + oracle::powm(2, t[1], 11) + t[2] * t[3]) % 11;
  });
  EXPECT_EQ(r.measured, h.size());
  expect_hard_ok(r);
  auto G = PrimeField::make(101);
  std::uint64_t prev = 0;
  for (std::uint64_t N = 1; N <= 12; ++N) {
    const auto m = quantity_mu5(G, N, zt).measured;
    EXPECT_GE(m, prev);
    prev = m;
  }
  EXPECT_EQ(code_of([&] { quantity_mu5(F, 11, zt); }), Errc::RangeError);
  EXPECT_EQ(code_of([&] { quantity_mu5(F, 3, Quad2{1, 1, 0, 0, 0, 0}); }), Errc::PolynomialDegenerate);
}

TEST(Growth, Mu6) {
  auto F = PrimeField::make(13);
  ASSERT_EQ(F->generator(), 2u);
  EXPECT_EQ(quantity_mu6(F, 1, Mu6Variant::A).measured, 1u);
  EXPECT_EQ(quantity_mu6(F, 1, Mu6Variant::B).measured, 1u);
  for (auto variant : {Mu6Variant::A, Mu6Variant::B}) {
    const auto r = quantity_mu6(F, 3, variant);
    const auto h = oracle::enumerate({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}}, [&](const std::vector<U>& t) {
      const U head = variant == Mu6Variant::A ? oracle::powm(2, t[0], 13) : t[0];
      U s = 0;
      for (int i = 1; i < 5; ++i) s += oracle::powm(2, t[i], 13);
      return head * (s % 13) % 13;
    });
    EXPECT_EQ(r.measured, h.size());
    expect_hard_ok(r);
  }
}

TEST(Growth, Maymay) {
  auto F = PrimeField::make(7);
  const Quad2 xy{0, 0, 1, 0, 0, 0};
  const auto r = quantity_maymay(S(F, {1, 2, 4}), xy);
  const auto sums = oracle::pairwise({1, 2, 4}, {1, 2, 4}, [](U x, U y) { return (x + y) % 7; });
  const auto prods = oracle::pairwise({1, 2, 4}, {1, 2, 4}, [](U x, U y) { return x * y % 7; });
  EXPECT_EQ(r.measured, std::max(sums.size(), prods.size()));
  EXPECT_EQ(r.measured, 6u);
  expect_hard_ok(r);
  EXPECT_EQ(quantity_maymay(S(F, {0}), xy).measured, 1u);
  EXPECT_EQ(code_of([&] { quantity_maymay(S(F, {1}), Quad2{1, 1, 2, 0, 0, 0}); }), Errc::PolynomialDegenerate);
  EXPECT_EQ(code_of([&] { quantity_maymay(S(F, {1}), Quad2{1, 0, 0, 1, 0, 0}); }), Errc::PolynomialDegenerate);
}

TEST(Growth, Buc1) {
  auto F = PrimeField::make(257);
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    const auto A = random_subset(F, 1 + rng.below(10), rng);
    const UniQuad f{1, static_cast<Elem>(rng.below(257)), 0};
    const auto r = quantity_buc1(A, f);
    ISet want;
    for (U x : oracle::vec(A))
      for (U y : oracle::vec(A)) want.insert((x * x + f.d * x + y) % 257);
    EXPECT_EQ(r.measured, want.size());
    expect_hard_ok(r);
    ASSERT_TRUE(r.extra("incidences").has_value());
  }
}

TEST(Growth, Mu1) {
  auto F = PrimeField::make(11);
  const auto r = quantity_mu1(F, 3);
  EXPECT_EQ(oracle::pairwise({2, 4, 8}, {2, 4, 8}, [](U x, U y) { return (x + y) % 11; }), (ISet{1, 4, 5, 6, 8, 10}));
  EXPECT_EQ(r.measured, 6u);
  expect_hard_ok(r);
  for (std::uint64_t N = 2; N <= 40; N += 7) expect_hard_ok(quantity_mu1(PrimeField::make(1009), N));
}

TEST(Growth, MotAndBa) {
  auto F = PrimeField::make(101);
  const auto X = S(F, {3, 9, 40, 77});
  EXPECT_EQ(quantity_mot(Quad2{0, 0, 1, 0, 0, 0}, S(F, {1}), X).measured, X.size());
  const auto A = S(F, {0, 1, 5, 22});
  EXPECT_EQ(quantity_ba(S(F, {1}), A).measured, difference_set(A, A).size());
  expect_hard_ok(quantity_ba(X, A));
  expect_hard_ok(quantity_mot(Quad2{1, 0, 2, 0, 0, 0}, A, X));
}

TEST(Growth, Tongtong) {
  auto F = PrimeField::make(11);
  const auto one = S(F, {1});
  const auto f3 = shift_compose(*F, Quad2{0, 0, 1, 0, 0, 0});
  const auto t1 = energy_tongtong(f3, one, one, one);
  EXPECT_EQ(static_cast<U>(t1.energy), 1u);
  EXPECT_EQ(static_cast<U>(t1.rhs), 2u);
  const auto A = S(F, {1, 2}), C = S(F, {0, 1, 3});
  const auto t = energy_tongtong(f3, A, A, C);
  const auto h = oracle::enumerate({{1, 2}, {1, 2}, {0, 1, 3}}, [](const std::vector<U>& v) {
    return (v[2] * v[1] + 11 * 11 - v[0] * v[1]) % 11;
  });
  EXPECT_EQ(static_cast<U>(t.energy), oracle::energy(h));
  // (|A||B||C|)^{3/2} = 12^{3/2} -> 42, plus |A||B||C|^2 = 2*2*9
  EXPECT_EQ(static_cast<U>(t.rhs), 42u + 36u);
  EXPECT_GE(t.energy, Wide{12});
  EXPECT_TRUE(t.not_decomposable);
  EXPECT_TRUE(t.sizes_ok);
}

TEST(Plunnecke, Example) {
  auto F = PrimeField::make(13);
  const auto A = S(F, {0, 1, 2});
  const PlunneckeParams params{{5, 3}, {1, 2}, 2};
  EXPECT_EQ(iterated_sumset(A, 2).size(), 5u);
  EXPECT_EQ(sumset(A, iterated_sumset(A, 2)).size(), 7u);
  const auto res = plunnecke_search(A, A, params, SearchMode::Exhaustive);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_FALSE(res.disproof);
  EXPECT_EQ(*res.witness, A);
  EXPECT_TRUE(plunnecke_conclusion_holds(A, A, iterated_sumset(A, 2), params));
  EXPECT_EQ(doubling_constant(A, A), (Rational{5, 3}));
}

TEST(Plunnecke, Errors) {
  auto F = PrimeField::make(101);
  const auto A = S(F, {0, 1, 2});
  EXPECT_EQ(code_of([&] { plunnecke_search(A, A, {{1, 1}, {1, 2}, 2}, SearchMode::Exhaustive); }), Errc::ParamsInvalid);
  EXPECT_EQ(code_of([&] { plunnecke_search(A, A, {{5, 3}, {1, 1}, 2}, SearchMode::Exhaustive); }), Errc::ParamsInvalid);
  EXPECT_EQ(code_of([&] { plunnecke_search(A, A, {{5, 3}, {1, 2}, 0}, SearchMode::Exhaustive); }), Errc::ParamsInvalid);
  const auto big = power_range(F, 1, 21);
  EXPECT_EQ(code_of([&] { plunnecke_search(big, big, {doubling_constant(big, big), {1, 2}, 1}, SearchMode::Exhaustive); }),
            Errc::SearchSpaceTooLarge);
  EXPECT_NO_THROW(plunnecke_search(big, big, {doubling_constant(big, big), {1, 2}, 1}, SearchMode::Greedy));
}

// Witness validity by direct recomputation of |X + kB| on random inputs.
TEST(Plunnecke, WitnessesAreValid) {
  auto F = PrimeField::make(101);
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const auto A = random_subset(F, 1 + rng.below(8), rng);
    const auto B = random_subset(F, 1 + rng.below(8), rng);
    const PlunneckeParams params{doubling_constant(A, B), {1, 2}, 2};
    const auto res = plunnecke_search(A, B, params, SearchMode::Exhaustive);
    ASSERT_TRUE(res.witness.has_value());
    const auto& X = *res.witness;
    EXPECT_TRUE(X.is_subset_of(A));
    EXPECT_FALSE(X.empty());
    EXPECT_GE(2 * X.size(), A.size());
    ISet kb{0};
    for (int i = 0; i < 2; ++i) kb = oracle::pairwise(kb, oracle::to_iset(B), [](U x, U y) { return (x + y) % 101; });
    const auto xkb = oracle::pairwise(oracle::to_iset(X), kb, [](U x, U y) { return (x + y) % 101; });
    // |X+2B| * delta^2 * den(K)^2 <= num(K)^2 * |X|, all integers
    const U lhs = xkb.size() * params.delta.num * params.delta.num * params.K.den * params.K.den;
    const U rhs = static_cast<U>(params.K.num * params.K.num) * params.delta.den * params.delta.den * X.size();
    EXPECT_LE(lhs, rhs);
  }
}

TEST(Fit, Examples) {
  const std::pair<std::uint64_t, std::uint64_t> sq[] = {{2, 4}, {4, 16}, {8, 64}};
  const auto f = fit_exponent(sq);
  EXPECT_NEAR(f.slope, 2.0, 1e-12);
  EXPECT_NEAR(f.residual, 0.0, 1e-12);
  const std::pair<std::uint64_t, std::uint64_t> lin[] = {{2, 2}, {4, 4}, {8, 8}};
  EXPECT_NEAR(fit_exponent(lin).slope, 1.0, 1e-12);
  const std::pair<std::uint64_t, std::uint64_t> three[] = {{2, 3}, {4, 9}, {8, 27}};
  EXPECT_NEAR(fit_exponent(three).slope, std::log(3.0) / std::log(2.0), 1e-12);
  const std::pair<std::uint64_t, std::uint64_t> two[] = {{2, 3}, {4, 9}};
  EXPECT_EQ(code_of([&] { fit_exponent(two); }), Errc::InsufficientData);
  const std::pair<std::uint64_t, std::uint64_t> same[] = {{4, 3}, {4, 9}, {4, 5}};
  EXPECT_EQ(code_of([&] { fit_exponent(same); }), Errc::InsufficientData);
  const std::pair<std::uint64_t, std::uint64_t> small[] = {{1, 3}, {4, 9}, {8, 5}};
  EXPECT_EQ(code_of([&] { fit_exponent(small); }), Errc::InsufficientData);
}

}  // namespace
