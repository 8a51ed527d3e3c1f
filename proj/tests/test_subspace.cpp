#include <gtest/gtest.h>

#include "hclab/error.hpp"
#include "hclab/subspace.hpp"
#include "test_support.hpp"

using namespace hclab;
using hclab::testing::V;

TEST(Subspace, Patterns) {
  const auto odd = SubspaceSpec::odd(NormKind::Sup);
  EXPECT_TRUE(odd.allows(1));
  EXPECT_FALSE(odd.allows(2));
  EXPECT_EQ(odd.nth_allowed(3), 5u);
  EXPECT_FALSE(odd.dimension());

  const auto even = SubspaceSpec::even(NormKind::L1);
  EXPECT_EQ(even.nth_allowed(1), 2u);

  const auto prog = SubspaceSpec::progression(3, 1, NormKind::Sup);  // 4, 7, 10, ...
  EXPECT_TRUE(prog.allows(7));
  EXPECT_FALSE(prog.allows(1));
  EXPECT_EQ(prog.nth_allowed(2), 7u);

  const auto fin = SubspaceSpec::explicit_indices({5, 2}, NormKind::Sup);
  EXPECT_EQ(fin.dimension(), 2u);
  EXPECT_EQ(fin.nth_allowed(1), 2u);
  EXPECT_FALSE(fin.nth_allowed(3));
}

TEST(Subspace, Membership) {
  const auto odd = SubspaceSpec::odd(NormKind::Sup);
  EXPECT_TRUE(odd.contains(V("{1:1, 5:-1/2^3}")));
  EXPECT_TRUE(odd.contains(SparseVector{}));
  EXPECT_EQ(odd.first_violation(V("{1:1, 4:1, 6:1}")), 4u);
}

TEST(Subspace, RejectsBadSpecs) {
  EXPECT_THROW(SubspaceSpec::progression(0, 1, NormKind::Sup), PreconditionError);
  EXPECT_THROW(SubspaceSpec::progression(2, -2, NormKind::Sup), PreconditionError);
  EXPECT_THROW(SubspaceSpec::explicit_indices({}, NormKind::Sup), PreconditionError);
  EXPECT_THROW(SubspaceSpec::explicit_indices({0, 1}, NormKind::Sup), PreconditionError);
}
