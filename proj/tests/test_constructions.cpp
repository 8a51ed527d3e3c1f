#include <gtest/gtest.h>

#include "hclab/constructions.hpp"
#include "hclab/error.hpp"
#include "hclab/orbit.hpp"
#include "test_support.hpp"

using namespace hclab;
using hclab::testing::e;
using hclab::testing::V;

TEST(Constructions, BuildT) {
  const auto id = BiorthogonalSystem::identity();
  const auto odd = BiorthogonalSystem::odd();
  EXPECT_EQ(apply(build_T(id), e(3)), V("{2:1/2^2, 3:1}"));
  EXPECT_EQ(apply(build_T(odd), e(3)), V("{1:1/2^1, 3:1}"));
  EXPECT_EQ(apply(build_T(id), e(1)), e(1));
  EXPECT_EQ(apply(build_T(odd), e(1)), e(1));
  EXPECT_EQ(apply(build_T(odd), e(2)), e(2));  // off the system
}

TEST(Constructions, BuildS) {
  const Operator s = build_S();
  EXPECT_EQ(apply(s, e(1)), e(1));
  EXPECT_EQ(apply(s, e(2)), V("{1:1/2^1, 2:1}"));
  EXPECT_EQ(apply(s, e(3)), V("{2:1/2^2, 3:1}"));
}

TEST(Constructions, Phi) {
  EXPECT_EQ(phi(e(2), BiorthogonalSystem::odd()), e(3));
  EXPECT_EQ(phi(V("{1:1/2^1, 2:1}"), BiorthogonalSystem::odd()), V("{1:1/2^1, 3:1}"));
  EXPECT_EQ(phi(e(4), BiorthogonalSystem::identity()), e(4));
}

TEST(Constructions, Quasiconjugacy) {
  const auto sys = BiorthogonalSystem::odd();
  EXPECT_TRUE(check_quasiconjugacy(build_T(sys), build_S(), sys, 2).passed);
  EXPECT_TRUE(check_quasiconjugacy(build_T(sys), build_S(), sys, 1).passed);
  const CheckReport r = check_quasiconjugacy(identity_op(), build_S(), sys, 2);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.failures.front().sample, 2u);
  EXPECT_EQ(r.failures.front().observed, e(3));
  for (const auto& s : {BiorthogonalSystem::identity(), BiorthogonalSystem(3, 1)})
    EXPECT_TRUE(check_quasiconjugacy(build_T(s), build_S(), s, 200).passed);
}

TEST(Constructions, Invariance) {
  const auto odd = SubspaceSpec::odd(NormKind::Sup);
  EXPECT_TRUE(check_invariance(build_T(BiorthogonalSystem::odd()), odd, {e(1), e(3), e(5)}).passed);
  const CheckReport r = check_invariance(scale(2, backward_shift()), odd, {e(3)});
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.failures.front().observed, 2 * e(2));
  EXPECT_TRUE(check_invariance(identity_op(), odd, {e(7)}).passed);
  EXPECT_THROW(check_invariance(identity_op(), odd, {e(2)}), PreconditionError);
}

TEST(Constructions, InvarianceOnEnumeratedMembers) {
  const auto odd = SubspaceSpec::odd(NormKind::Sup);
  EXPECT_TRUE(check_invariance(build_T(BiorthogonalSystem::odd()), odd, enumerate_prefix(odd, 500)).passed);
}
