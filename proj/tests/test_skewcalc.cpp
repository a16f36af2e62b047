#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace grassmann;
using Q = Rational;
using E = Element<Q>;

namespace {

E P(int n, const std::string &s) { return parse_element<Q>(n, s); }

E any(int n, Rng &rng) {
  return random_element<Q>(n, rng, [](Mask) { return true; }, 0.4);
}

E homogeneous(int n, int parity, Rng &rng) {
  return random_element<Q>(n, rng, [parity](Mask m) { return degree(m) % 2 == parity; }, 0.4);
}

}  // namespace

TEST(SkewPartial, Generator) {
  EXPECT_EQ(skew_partial(1, P(3, "x1")), E::one(3));
  EXPECT_TRUE(skew_partial(2, P(3, "x1")).is_zero());
}

TEST(SkewPartial, MiddleOfThree) { EXPECT_EQ(to_string(skew_partial(2, P(3, "x1x2x3"))), "-x1x3"); }

TEST(SkewPartial, FirstAndLast) {
  EXPECT_EQ(skew_partial(1, P(3, "x1x2x3")), P(3, "x2x3"));
  EXPECT_EQ(skew_partial(3, P(3, "x1x2x3")), P(3, "x1x2"));
}

TEST(SkewPartial, BadIndex) {
  EXPECT_THROW(skew_partial(0, P(3, "x1")), DimensionError);
  EXPECT_THROW(skew_partial(4, P(3, "x1")), DimensionError);
}

TEST(SkewPartial, MatchesPositionOracle) {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 8;
    E a = any(n, rng);
    for (int i = 1; i <= n; ++i) ASSERT_EQ(skew_partial(i, a), oracle::skew_partial(i, a));
  }
}

TEST(SkewPartial, SquaresToZeroAndAnticommute) {
  Rng rng(2);
  int n = 6;
  for (int t = 0; t < 50; ++t) {
    E a = any(n, rng);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        ASSERT_EQ(skew_partial(i, skew_partial(j, a)), -skew_partial(j, skew_partial(i, a)));
  }
}

TEST(SkewPartial, CanonicalAnticommutationWithGenerators) {
  Rng rng(3);
  int n = 6;
  for (int t = 0; t < 50; ++t) {
    E a = any(n, rng);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        E lhs = skew_partial(i, left_mul(j, a)) + left_mul(j, skew_partial(i, a));
        ASSERT_EQ(lhs, i == j ? a : E(n));
      }
  }
}

TEST(SkewPartial, LeibnizRule) {
  Rng rng(4);
  int n = 6;
  for (int t = 0; t < 100; ++t) {
    E a = any(n, rng), b = any(n, rng);
    for (int i = 1; i <= n; ++i)
      ASSERT_EQ(skew_partial(i, a * b), skew_partial(i, a) * b + involution(a) * skew_partial(i, b));
  }
}

TEST(SkewPartial, LeibnizOnHomogeneous) {
  Rng rng(5);
  int n = 5;
  for (int t = 0; t < 50; ++t)
    for (int parity : {0, 1}) {
      E a = homogeneous(n, parity, rng), b = any(n, rng);
      E sign_a = parity ? -a : a;
      for (int i = 1; i <= n; ++i) ASSERT_EQ(skew_partial(i, a * b), skew_partial(i, a) * b + sign_a * skew_partial(i, b));
    }
}

TEST(SkewPartial, EvenElementsCommute) {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    E a = homogeneous(6, 0, rng), b = any(6, rng);
    ASSERT_EQ(a * b, b * a);
  }
}

TEST(MultiIndex, LowestIndexActsFirst) {
  EXPECT_EQ(partial_multi(mask_of({1, 2}), P(2, "x1x2")), E::one(2));
  EXPECT_EQ(partial_multi(mask_of({1, 2}), P(2, "x2x1")), -E::one(2));
  EXPECT_EQ(partial_multi(mask_of({1, 3}), P(3, "x1x2x3")), -P(3, "x2"));
}

TEST(MultiIndex, AllPartialsAgree) {
  Rng rng(7);
  int n = 5;
  for (int t = 0; t < 30; ++t) {
    E a = any(n, rng);
    auto d = all_partials(a);
    for (Mask m = 0; m < (Mask(1) << n); ++m) ASSERT_EQ(d[m], partial_multi(m, a));
  }
}

TEST(Projection, FactorsAreIdempotentAndCommute) {
  Rng rng(8);
  int n = 5;
  for (int t = 0; t < 30; ++t) {
    E a = any(n, rng);
    for (int i = 1; i <= n; ++i) {
      ASSERT_EQ(phi_i(i, phi_i(i, a)), phi_i(i, a));
      for (int j = 1; j <= n; ++j) ASSERT_EQ(phi_i(i, phi_i(j, a)), phi_i(j, phi_i(i, a)));
    }
  }
}

TEST(Projection, ScalarPart) {
  EXPECT_EQ(phi_projection(P(3, "2 + x1 - x2x3")), Q(2));
  EXPECT_EQ(phi_projection(P(3, "x1x2x3")), Q(0));
}

TEST(Projection, ExpansionIsTheScalar) {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    E a = any(1 + t % 7, rng);
    ASSERT_EQ(phi_expansion(a), E::constant(a.n(), phi_projection(a)));
    ASSERT_EQ(phi_projection(a), a.constant_term());
  }
}

TEST(Taylor, BothModesReconstruct) {
  Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    E a = any(1 + t % 7, rng);
    ASSERT_EQ(taylor_reconstruct(a, TaylorMode::AtZero), a);
    ASSERT_EQ(taylor_reconstruct(a, TaylorMode::Projected), a);
  }
}

TEST(Taylor, SmallExample) {
  E a = P(3, "1 - x1x3 + 2*x1x2x3");
  EXPECT_EQ(taylor_reconstruct(a, TaylorMode::AtZero), a);
}

TEST(IdentityOperator, ActsAsIdentity) {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    E a = any(1 + t % 7, rng);
    ASSERT_EQ(identity_decomposition(a), a);
  }
}

TEST(CoordinateSplit, ReassemblesWithSupports) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    E a = any(2 + t % 6, rng);
    auto cs = coordinate_split(a);
    ASSERT_EQ(cs.reassemble(), a);
    ASSERT_TRUE(split_supports_ok(cs));
    ASSERT_TRUE(cs.b.back().is_constant());
  }
}

TEST(CoordinateSplit, TopMonomial) {
  auto cs = coordinate_split(P(3, "3*x1x2x3 + x2"));
  EXPECT_EQ(cs.a_n(), Q(3));
  EXPECT_EQ(cs.b[0], P(3, "x2"));
}

TEST(SkewPartial, PrimeFieldMatchesOracle) {
  Fp::Modulus mod(7);
  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    auto a = random_element<Fp>(6, rng, [](Mask) { return true; });
    for (int i = 1; i <= 6; ++i) ASSERT_EQ(skew_partial(i, a), oracle::skew_partial(i, a));
  }
}
