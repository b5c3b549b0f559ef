#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "platkit/laurent.hpp"
#include "test_support.hpp"

using namespace platkit;
using platkit::testing::poly;

namespace {

// Brute force over a window of shifts and both signs.
bool doteq_oracle(const LaurentPoly& f, const LaurentPoly& g) {
  for (Exponent n = -40; n <= 40; ++n) {
    for (int s : {1, -1}) {
      if (shift_scale(f, n, s) == g) return true;
    }
  }
  return false;
}

// Search the doteq class for the member with g(1) = 1 and g'(1) = 0.
LaurentPoly normalize_oracle(const LaurentPoly& f) {
  for (Exponent n = -2000; n <= 2000; ++n) {
    for (int s : {1, -1}) {
      LaurentPoly g = shift_scale(f, n, s);
      Integer value = 0;
      Integer slope = 0;
      for (const auto& t : g.terms()) {
        value += t.coefficient;
        slope += t.coefficient * t.exponent;
      }
      if (value == 1 && slope == 0) return g;
    }
  }
  throw std::logic_error("oracle window too small");
}

}  // namespace

TEST(Laurent, FromTermsCancelsAndDropsZeros) {
  EXPECT_EQ(poly({{0, 1}, {1, -1}, {1, 1}}), LaurentPoly::constant(1));
  auto f = poly({{0, 2}, {1, -1}});
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient(0), 2);
  EXPECT_EQ(f.coefficient(1), -1);
  EXPECT_TRUE(LaurentPoly::from_terms({}).is_zero());
  EXPECT_TRUE(poly({{3, 2}, {3, -2}}).is_zero());
}

TEST(Laurent, EvalInt) {
  EXPECT_EQ(eval_int(poly({{1, 2}, {2, -1}}), -1), -3);
  EXPECT_EQ(eval_int(LaurentPoly::constant(1), -1), 1);
  EXPECT_EQ(eval_int(poly({{2, 3}, {3, -2}}), -1), 5);
  EXPECT_EQ(eval_int(poly({{-1, 1}, {0, 4}}), -1), 3);
  EXPECT_EQ(eval_int(poly({{0, 1}, {2, 1}}), 3), 10);
  EXPECT_THROW(eval_int(poly({{-1, 1}}), 2), std::domain_error);
  EXPECT_THROW(eval_int(poly({{1, 1}}), 0), std::domain_error);
}

TEST(Laurent, ShiftScale) {
  EXPECT_EQ(shift_scale(poly({{0, 2}, {1, -1}}), 1, 1), poly({{1, 2}, {2, -1}}));
  EXPECT_EQ(shift_scale(LaurentPoly::constant(1), 0, -1), LaurentPoly::constant(-1));
  EXPECT_EQ(shift_scale(poly({{1, 1}, {0, -1}}), -1, -1), poly({{-1, 1}, {0, -1}}));
  EXPECT_THROW(shift_scale(LaurentPoly::constant(1), 0, 2), std::invalid_argument);
}

TEST(Laurent, Doteq) {
  const auto two_minus_t = poly({{0, 2}, {1, -1}});
  EXPECT_TRUE(doteq(two_minus_t, poly({{1, 2}, {2, -1}})));
  EXPECT_TRUE(doteq(two_minus_t, poly({{1, 1}, {0, -2}})));
  EXPECT_FALSE(doteq(two_minus_t, poly({{0, 2}, {1, 1}})));
  EXPECT_TRUE(doteq(LaurentPoly{}, LaurentPoly{}));
  EXPECT_FALSE(doteq(LaurentPoly{}, two_minus_t));
}

TEST(Laurent, DoteqAgreesWithBruteForce) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> shift(-8, 8);
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = platkit::testing::random_poly(rng);
    // Half the time g is a genuine shift of f, otherwise independent.
    const auto g = (trial % 2) ? shift_scale(f, shift(rng), trial % 4 == 1 ? 1 : -1)
                               : platkit::testing::random_poly(rng);
    EXPECT_EQ(doteq(f, g), doteq_oracle(f, g)) << to_string(f) << " vs " << to_string(g);
  }
}

TEST(Laurent, DoteqIsAnEquivalenceRelation) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> shift(-8, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = platkit::testing::random_poly(rng);
    const auto g = shift_scale(f, shift(rng), trial % 2 ? 1 : -1);
    const auto h = shift_scale(g, shift(rng), trial % 3 ? 1 : -1);
    const auto other = platkit::testing::random_poly(rng);
    EXPECT_TRUE(doteq(f, f));
    EXPECT_TRUE(doteq(f, g));
    EXPECT_TRUE(doteq(g, f));
    EXPECT_TRUE(doteq(g, h));
    EXPECT_TRUE(doteq(f, h));
    EXPECT_EQ(doteq(f, other), doteq(other, f));
    EXPECT_EQ(doteq(g, other), doteq(f, other));
  }
}

TEST(Laurent, NormalizeExamples) {
  EXPECT_EQ(normalize(poly({{0, 2}, {1, -1}})), poly({{1, 2}, {2, -1}}));
  EXPECT_EQ(normalize(poly({{-1, -1}, {0, 4}, {1, -2}})), poly({{0, -1}, {1, 4}, {2, -2}}));
  EXPECT_EQ(normalize(LaurentPoly::constant(1)), LaurentPoly::constant(1));
  EXPECT_EQ(normalize(LaurentPoly::constant(-1)), LaurentPoly::constant(1));
  EXPECT_THROW(normalize(poly({{0, 1}, {1, 1}})), std::domain_error);
  EXPECT_THROW(normalize(LaurentPoly{}), std::domain_error);
}

TEST(Laurent, NormalizeMatchesOracleAndIsClassRepresentative) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> shift(-8, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = platkit::testing::random_knot_like_poly(rng);
    const auto nf = normalize(f);
    EXPECT_EQ(nf, normalize_oracle(f));
    EXPECT_EQ(normalize(nf), nf);
    EXPECT_TRUE(doteq(f, nf));
    EXPECT_EQ(normalize(shift_scale(f, shift(rng), trial % 2 ? 1 : -1)), nf);
  }
}

TEST(Laurent, Reciprocal) {
  EXPECT_TRUE(is_reciprocal(poly({{0, 1}, {1, -1}, {2, 1}})));
  EXPECT_FALSE(is_reciprocal(poly({{0, 2}, {1, -1}})));
  EXPECT_TRUE(is_reciprocal(LaurentPoly{}));
  // Antisymmetric coefficients are reciprocal up to sign.
  EXPECT_TRUE(is_reciprocal(poly({{0, 1}, {1, -1}})));

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> shift(-8, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = platkit::testing::random_poly(rng);
    EXPECT_EQ(is_reciprocal(shift_scale(f, shift(rng), trial % 2 ? 1 : -1)), is_reciprocal(f));
    EXPECT_EQ(eval_int(shift_scale(f, shift(rng), 1), 1), eval_int(f, 1));
  }
}

TEST(Laurent, Monic) {
  EXPECT_TRUE(is_monic(poly({{0, 1}, {1, -1}, {2, 1}})));
  EXPECT_FALSE(is_monic(poly({{1, 2}, {2, -1}})));
  EXPECT_TRUE(is_monic(poly({{3, 1}})));
  EXPECT_THROW(is_monic(LaurentPoly{}), std::domain_error);
}

TEST(Laurent, TupleNotation) {
  EXPECT_EQ(to_tuple_string(poly({{1, 2}, {2, -1}})), "([0], 2, -1)");
  EXPECT_EQ(to_tuple_string(LaurentPoly::constant(1)), "([1])");
  EXPECT_EQ(to_tuple_string(poly({{2, 3}, {3, -2}})), "([0], 0, 3, -2)");
  EXPECT_EQ(to_tuple_string(poly({{-2, -1}, {-1, 4}, {0, -4}, {1, 2}})), "(-1, 4, [-4], 2)");
  EXPECT_EQ(to_tuple_string(poly({{-3, -2}, {-2, 6}, {-1, -6}, {0, 3}})), "(-2, 6, -6, [3])");
  EXPECT_EQ(to_tuple_string(poly({{-3, 1}})), "(1, 0, 0, [0])");
  EXPECT_EQ(to_tuple_string(LaurentPoly{}), "([0])");
}

TEST(Laurent, TupleParseInvertsRendering) {
  EXPECT_EQ(parse_tuple("(-1, 4, [-4], 2)"), poly({{-2, -1}, {-1, 4}, {0, -4}, {1, 2}}));
  EXPECT_EQ(parse_tuple(" ( [0] , 0, 3, -2 ) "), poly({{2, 3}, {3, -2}}));
  EXPECT_THROW(parse_tuple("(1, 2)"), std::invalid_argument);
  EXPECT_THROW(parse_tuple("([1], [2])"), std::invalid_argument);
  EXPECT_THROW(parse_tuple("([x])"), std::invalid_argument);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = platkit::testing::random_poly(rng);
    EXPECT_EQ(parse_tuple(to_tuple_string(f)), f);
  }
}

TEST(Laurent, HumanReadable) {
  EXPECT_EQ(to_string(poly({{-1, -1}, {0, 4}, {1, -2}})), "-t^-1 + 4 - 2t");
  EXPECT_EQ(to_string(LaurentPoly{}), "0");
}

TEST(Laurent, ArithmeticAndReflect) {
  const auto f = poly({{-1, 1}, {2, 3}});
  EXPECT_EQ(f.reflect(), poly({{1, 1}, {-2, 3}}));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(f + f, poly({{-1, 2}, {2, 6}}));
  // Coefficients are unbounded.
  const Integer big("123456789012345678901234567890");
  const auto g = LaurentPoly::constant(big) + LaurentPoly::constant(big);
  EXPECT_EQ(g.coefficient(0), big * 2);
}
