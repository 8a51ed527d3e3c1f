#include <gtest/gtest.h>

#include "hclab/error.hpp"
#include "test_support.hpp"

using namespace hclab;
using hclab::testing::D;

TEST(Dyadic, ScalarOpExamples) {
  EXPECT_EQ(scalar_op(ScalarOp::Add, D("1/2"), D("1/4")), D("3/4"));
  EXPECT_EQ(scalar_op(ScalarOp::Mul, D("-3/8"), 2), D("-3/4"));
  EXPECT_EQ(scalar_op(ScalarOp::Shift2, 5, -3), D("5/8"));
  EXPECT_EQ(scalar_op(ScalarOp::Sub, D("1/2"), D("1/2")), Dyadic(0));
}

TEST(Dyadic, Shift2NeedsIntegerAmount) {
  EXPECT_THROW(scalar_op(ScalarOp::Shift2, 1, D("1/2")), PreconditionError);
}

TEST(Dyadic, LtPow2Examples) {
  EXPECT_TRUE(lt_pow2(D("1/4"), 1));
  EXPECT_FALSE(lt_pow2(D("1/2"), 1));
  EXPECT_TRUE(lt_pow2(0, 100));
  EXPECT_FALSE(lt_pow2(1, 0));
  EXPECT_TRUE(lt_pow2(1, -1));
  EXPECT_FALSE(lt_pow2(3, -1));
}

TEST(Dyadic, CanonicalForm) {
  const Dyadic a(Dyadic::Int(12), 4);  // 12/16 = 3/4
  EXPECT_EQ(a.numerator(), 3);
  EXPECT_EQ(a.exponent(), 2u);
  EXPECT_EQ(Dyadic(Dyadic::Int(0), 9).exponent(), 0u);
  EXPECT_EQ(Dyadic(2).shifted(-2), D("1/2"));
  EXPECT_EQ(Dyadic(2).shifted(-2).exponent(), 1u);
  EXPECT_EQ(D("3/2^2").shifted(3), Dyadic(6));
}

TEST(Dyadic, ParseAndPrint) {
  EXPECT_EQ(D("-3/2^3").to_string(), "-3/2^3");
  EXPECT_EQ(D("6/8").to_string(), "3/2^2");
  EXPECT_EQ(D("  7 ").to_string(), "7");
  EXPECT_EQ(D("4/2^2").to_string(), "1");
  EXPECT_THROW(D("0.5"), ParseError);
  EXPECT_THROW(D("1/3"), ParseError);
  EXPECT_THROW(D("1/2^x"), ParseError);
  EXPECT_THROW(D(""), ParseError);
}

TEST(Dyadic, Ordering) {
  EXPECT_LT(D("1/4"), D("1/2"));
  EXPECT_LT(D("-1"), D("-1/2"));
  EXPECT_GT(D("3/2^1"), 1);
  EXPECT_EQ(D("-1/2").abs(), D("1/2"));
}

class DyadicProperty : public ::testing::Test {
 protected:
  static constexpr int kIterations = 2000;
  std::mt19937_64 rng{20260301};
  Dyadic draw() { return random_dyadic(rng, 1 << 20, 40); }
};

TEST_F(DyadicProperty, RingLaws) {
  for (int i = 0; i < kIterations; ++i) {
    const Dyadic a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b - b, a);
    EXPECT_EQ(a - a, Dyadic(0));
  }
}

TEST_F(DyadicProperty, CanonicalRoundTrip) {
  for (int i = 0; i < kIterations; ++i) {
    const Dyadic a = draw();
    const Dyadic b = Dyadic::parse(a.to_string());
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.numerator(), b.numerator());
    EXPECT_EQ(a.exponent(), b.exponent());
    if (a.exponent() > 0) EXPECT_TRUE(boost::multiprecision::bit_test(a.numerator(), 0)) << a;
  }
}

TEST_F(DyadicProperty, ShiftMatchesMultiplication) {
  for (int i = 0; i < kIterations; ++i) {
    const Dyadic a = draw();
    const auto j = static_cast<std::int64_t>(rng() % 41) - 20;
    EXPECT_EQ(a.shifted(j), a * Dyadic::pow2(j));
    EXPECT_EQ(a.shifted(j).shifted(-j), a);
  }
}

// Oracle: a < 2^-k  <=>  a * 2^(k + E) < 2^E for a large enough E, done on integers.
TEST_F(DyadicProperty, LtPow2MatchesIntegerOracle) {
  for (int i = 0; i < kIterations; ++i) {
    const Dyadic a = random_dyadic(rng, 64, 10);
    const auto k = static_cast<std::int64_t>(rng() % 25) - 8;
    const std::int64_t E = 64;
    const Dyadic::Int lhs = a.numerator() << static_cast<unsigned>(E + k);
    const Dyadic::Int rhs = Dyadic::Int(1) << static_cast<unsigned>(E + static_cast<std::int64_t>(a.exponent()));
    EXPECT_EQ(lt_pow2(a, k), lhs < rhs) << a << " k=" << k;
  }
}
