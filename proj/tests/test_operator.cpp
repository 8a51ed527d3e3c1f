#include <gtest/gtest.h>

#include "hclab/constructions.hpp"
#include "hclab/error.hpp"
#include "hclab/operator.hpp"
#include "test_support.hpp"

using namespace hclab;
using hclab::testing::D;
using hclab::testing::e;
using hclab::testing::V;

namespace {
Operator twoB() { return scale(2, backward_shift()); }
Operator halfF() { return scale(D("1/2"), forward_shift()); }
}  // namespace

TEST(Operator, ShiftDefinitions) {
  EXPECT_TRUE(apply(backward_shift(), e(1)).is_zero());
  EXPECT_EQ(apply(backward_shift(), e(4)), e(3));
  EXPECT_EQ(apply(forward_shift(), e(4)), e(5));
  const auto w = weighted_backward_shift(WeightRule::geometric(3, -2));
  EXPECT_EQ(apply(w, e(3)), V("{2:3/2^4}"));  // w(2) = 3 * 2^-4
  const auto f = weighted_forward_shift(WeightRule::constant(D("1/2")));
  EXPECT_EQ(apply(f, e(2)), V("{3:1/2^1}"));
}

TEST(Operator, ApplyExamples) {
  EXPECT_EQ(apply(twoB(), e(2)), 2 * e(1));
  EXPECT_EQ(apply(halfF(), e(1)), D("1/2") * e(2));
  EXPECT_EQ(apply(build_S(), e(2)), V("{1:1/2^1, 2:1}"));
}

TEST(Operator, ApplyPowerExamples) {
  EXPECT_EQ(apply_power(twoB(), 2, e(3)), 4 * e(1));
  EXPECT_EQ(apply_power(build_S(), 0, e(7)), e(7));
  EXPECT_EQ(apply_power(halfF(), 3, e(1)), D("1/8") * e(4));
  EXPECT_EQ(apply(power(twoB(), 2), e(3)), 4 * e(1));
}

TEST(Operator, KernelIndexExamples) {
  EXPECT_EQ(kernel_index(twoB(), e(3), 10), 3u);
  EXPECT_EQ(kernel_index(twoB(), SparseVector{}, 10), 0u);
  EXPECT_FALSE(kernel_index(identity_op(), e(1), 10));
  EXPECT_FALSE(kernel_index(twoB(), e(11), 10));
  EXPECT_THROW(kernel_index(twoB(), e(1), 0), PreconditionError);
}

TEST(Operator, NormBoundExamples) {
  EXPECT_EQ(operator_norm_bound(twoB(), NormKind::Sup), 2);
  EXPECT_EQ(operator_norm_bound(build_T(BiorthogonalSystem::identity()), NormKind::Sup), 2);
  EXPECT_EQ(operator_norm_bound(compose(twoB(), halfF()), NormKind::Sup), 1);
  EXPECT_EQ(operator_norm_bound(sum({identity_op(), twoB()}), NormKind::L1), 3);
  EXPECT_EQ(operator_norm_bound(power(twoB(), 3), NormKind::L1), 8);
  EXPECT_THROW(operator_norm_bound(weighted_backward_shift(WeightRule::geometric(1, 1)), NormKind::Sup), BoundError);
}

TEST(Operator, LeftInverseExamples) {
  EXPECT_TRUE(is_left_inverse_on(twoB(), halfF(), {e(1)}).passed);
  EXPECT_TRUE(is_left_inverse_on(backward_shift(), forward_shift(), {e(5)}).passed);
  const CheckReport r = is_left_inverse_on(twoB(), forward_shift(), {e(1)});
  ASSERT_FALSE(r.passed);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(r.failures.front().input, e(1));
  EXPECT_EQ(r.failures.front().observed, 2 * e(1));
}

TEST(Operator, StructuralEquality) {
  EXPECT_EQ(twoB(), scale(2, backward_shift()));
  EXPECT_NE(twoB(), halfF());
  EXPECT_FALSE(describe(compose(twoB(), halfF())).empty());
}

class OperatorProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{4242};
  SubspaceSpec all = SubspaceSpec::all(NormKind::Sup);
  std::vector<Operator> ops{twoB(),
                            halfF(),
                            build_S(),
                            build_T(BiorthogonalSystem::odd()),
                            build_T(BiorthogonalSystem::identity()),
                            compose(twoB(), halfF()),
                            sum({identity_op(), scale(D("-3/4"), forward_shift())}),
                            weighted_backward_shift(WeightRule::geometric(5, -1))};
};

TEST_F(OperatorProperty, Linearity) {
  for (int i = 0; i < 300; ++i) {
    const SparseVector x = random_vector(rng, all), y = random_vector(rng, all);
    const Dyadic a = random_dyadic(rng), b = random_dyadic(rng);
    for (const auto& t : ops) EXPECT_EQ(apply(t, a * x + b * y), a * apply(t, x) + b * apply(t, y)) << describe(t);
  }
}

TEST_F(OperatorProperty, SemigroupLaw) {
  for (int i = 0; i < 200; ++i) {
    const SparseVector x = random_vector(rng, all);
    const std::uint64_t m = rng() % 6, n = rng() % 6;
    for (const auto& t : ops) EXPECT_EQ(apply_power(t, m + n, x), apply_power(t, m, apply_power(t, n, x)));
  }
}

TEST_F(OperatorProperty, NormBoundHolds) {
  for (int i = 0; i < 500; ++i) {
    const SparseVector x = random_vector(rng, all);
    for (const auto& t : ops)
      for (NormKind k : {NormKind::L1, NormKind::Sup})
        EXPECT_LE(norm(apply(t, x), k), operator_norm_bound(t, k) * norm(x, k)) << describe(t) << " " << x.to_string();
  }
}

TEST_F(OperatorProperty, KernelIndexOfBackwardShiftIsMaxSupport) {
  for (int i = 0; i < 1000; ++i) {
    const SparseVector x = random_vector(rng, all);
    const auto expected = x.max_index().value_or(0);
    EXPECT_EQ(kernel_index(twoB(), x, 64), expected);
    SparseVector y = x;
    std::uint64_t p = 0;
    while (!y.is_zero()) {
      y = apply(twoB(), y);
      ++p;
    }
    EXPECT_EQ(p, expected);
  }
}
