#include <gtest/gtest.h>

#include "expander/families.hpp"
#include "expander/fpset.hpp"
#include "expander/poly.hpp"
#include "oracle.hpp"

using namespace expander;
using oracle::ISet;
using oracle::U;

namespace {

FpSet S(const FieldPtr& F, std::vector<Elem> xs) { return FpSet(F, xs); }

TEST(FpSet, Basics) {
  auto F = PrimeField::make(131);
  FpSet s(F);
  EXPECT_TRUE(s.empty());
  s.insert(130);
  s.insert(64);
  s.insert(64);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.elements(), (std::vector<Elem>{64, 130}));
  const std::int64_t raw[] = {-1, 130, 262, 5};
  const auto t = FpSet::from_integers(F, raw);
  EXPECT_EQ(t.elements(), (std::vector<Elem>{0, 5, 130}));
  EXPECT_TRUE(S(F, {5}).is_subset_of(t));
  EXPECT_FALSE(t.is_subset_of(S(F, {5})));
}

TEST(FpSet, FieldMismatch) {
  auto F = PrimeField::make(7), G = PrimeField::make(11);
  try {
    sumset(S(F, {1}), S(G, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
}

TEST(Sumset, Examples) {
  auto F = PrimeField::make(7);
  EXPECT_EQ(sumset(S(F, {0}), S(F, {0})).elements(), (std::vector<Elem>{0}));
  EXPECT_EQ(sumset(S(F, {1, 2, 4}), S(F, {1, 2, 4})).elements(), (std::vector<Elem>{1, 2, 3, 4, 5, 6}));
  const auto A = S(F, {2, 3, 6});
  EXPECT_EQ(sumset(A, S(F, {0})), A);
  EXPECT_EQ(difference_set(S(F, {0, 1}), S(F, {0, 1})).elements(), (std::vector<Elem>{0, 1, 6}));
  EXPECT_EQ(difference_set(S(F, {5}), S(F, {2})).elements(), (std::vector<Elem>{3}));
}

TEST(ProductSet, Examples) {
  auto F = PrimeField::make(7);
  const auto A = S(F, {0, 3, 5});
  EXPECT_EQ(product_set(S(F, {1}), A), A);
  EXPECT_EQ(product_set(S(F, {0}), A).elements(), (std::vector<Elem>{0}));
  EXPECT_EQ(product_set(S(F, {2, 3}), S(F, {2, 3})).elements(), (std::vector<Elem>{2, 4, 6}));
}

TEST(Dilate, Examples) {
  auto F = PrimeField::make(7);
  EXPECT_EQ(dilate_power(S(F, {0, 1, 6}), 3).elements(), (std::vector<Elem>{0, 1, 6}));
  EXPECT_EQ(dilate_power(S(F, {2}), 3).elements(), (std::vector<Elem>{1}));
  const auto A = S(F, {0, 2, 3});
  EXPECT_EQ(dilate_power(A, 1), A);
}

TEST(ImageBinary, Examples) {
  auto F = PrimeField::make(7);
  const Quad2 xy{0, 0, 1, 0, 0, 0};
  const Quad2 sq{1, 1, 0, 0, 0, 0};
  const auto B = S(F, {2, 5, 6});
  EXPECT_EQ(image_binary(xy, S(F, {0}), B).elements(), (std::vector<Elem>{0}));
  EXPECT_EQ(image_binary(xy, S(F, {1}), B), B);
  EXPECT_EQ(image_binary(sq, S(F, {1, 2}), S(F, {1, 2})).elements(), (std::vector<Elem>{1, 2, 5}));
}

TEST(PowerRange, Examples) {
  auto F = PrimeField::make(7);
  EXPECT_EQ(power_range(F, 1, 3).elements(), (std::vector<Elem>{2, 3, 6}));
  EXPECT_EQ(power_range(F, 1, 6).elements(), (std::vector<Elem>{1, 2, 3, 4, 5, 6}));
  try {
    power_range(F, 4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RangeError);
  }
  EXPECT_THROW(power_range(F, 0, 2), Error);
  EXPECT_THROW(power_range(F, 1, 7), Error);
  EXPECT_EQ(integer_range(F, 5, 9).elements(), (std::vector<Elem>{0, 1, 2, 5, 6}));
}

// Every algorithm against set-of-integers enumeration on random inputs,
// including sizes on both sides of the Auto switch and p across word edges.
TEST(SetOps, AlgorithmsAgreeWithEnumeration) {
  for (U p : {5, 61, 64 + 3, 127, 131, 257, 1009}) {
    auto F = PrimeField::make(p);
    Rng rng(p);
    for (int trial = 0; trial < 12; ++trial) {
      const auto A = random_subset(F, 1 + rng.below(std::min<U>(p, 40)), rng);
      const auto B = random_subset(F, 1 + rng.below(p), rng);
      const ISet a = oracle::to_iset(A), b = oracle::to_iset(B);
      const auto add = oracle::pairwise(a, b, [p](U x, U y) { return (x + y) % p; });
      const auto sub = oracle::pairwise(a, b, [p](U x, U y) { return (x + p - y) % p; });
      const auto mul = oracle::pairwise(a, b, [p](U x, U y) { return x * y % p; });
      for (auto algo : {SumsetAlgo::Auto, SumsetAlgo::Pairs, SumsetAlgo::Rotate}) {
        EXPECT_EQ(oracle::to_iset(sumset(A, B, algo)), add) << p;
        EXPECT_EQ(oracle::to_iset(difference_set(A, B, algo)), sub) << p;
        EXPECT_EQ(oracle::to_iset(product_set(A, B, algo)), mul) << p;
      }
      ISet cubes, neg, tr, sc;
      const U t = rng.below(p), lam = rng.below(p);
      for (U x : a) {
        cubes.insert(oracle::powm(x, 3, p));
        neg.insert((p - x) % p);
        tr.insert((x + t) % p);
        sc.insert(x * lam % p);
      }
      EXPECT_EQ(oracle::to_iset(dilate_power(A, 3)), cubes);
      EXPECT_EQ(oracle::to_iset(negate(A)), neg);
      EXPECT_EQ(oracle::to_iset(translate(A, static_cast<Elem>(t))), tr);
      EXPECT_EQ(oracle::to_iset(scale(A, static_cast<Elem>(lam))), sc);
    }
  }
}

TEST(SetOps, IteratedSumset) {
  auto F = PrimeField::make(101);
  const auto B = S(F, {0, 1, 5});
  EXPECT_EQ(iterated_sumset(B, 0).elements(), (std::vector<Elem>{0}));
  EXPECT_EQ(iterated_sumset(B, 1), B);
  ISet acc{0};
  for (unsigned k = 1; k <= 4; ++k) {
    acc = oracle::pairwise(acc, oracle::to_iset(B), [](U x, U y) { return (x + y) % 101; });
    EXPECT_EQ(oracle::to_iset(iterated_sumset(B, k)), acc);
  }
}

TEST(SetOps, ImagesAgreeWithDirectEvaluation) {
  auto F = PrimeField::make(257);
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto A = random_subset(F, 1 + rng.below(30), rng);
    const auto B = random_subset(F, 1 + rng.below(30), rng);
    const Quad2 g{static_cast<Elem>(rng.below(257)), static_cast<Elem>(rng.below(257)),
                  static_cast<Elem>(rng.below(257)), static_cast<Elem>(rng.below(257)),
                  static_cast<Elem>(rng.below(257)), static_cast<Elem>(rng.below(257))};
    const UniQuad f{g.a, g.d, g.c0};
    ISet want2, want1;
    for (U x : oracle::vec(A)) {
      want1.insert((f.a * x % 257 * x + f.d * x + f.c0) % 257);
      for (U y : oracle::vec(B))
        want2.insert((g.a * x % 257 * x + g.b * y % 257 * y + g.c * x % 257 * y + g.d * x + g.e * y + g.c0) % 257);
    }
    EXPECT_EQ(oracle::to_iset(image_binary(g, A, B)), want2);
    EXPECT_EQ(oracle::to_iset(image_unary(f, A)), want1);
  }
}

}  // namespace
