// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ampvi/feasible_set.h"

#include <random>

#include <gtest/gtest.h>

#include "test_util.h"

namespace ampvi {
namespace {

using ::ampvi::testing::Gaussian;
using ::ampvi::testing::Vec;

std::vector<FeasibleSet> Sets() {
  return {FeasibleSet::Box(4, -1.0, 2.0),
          FeasibleSet::Simplex(5),
          FeasibleSet::Simplex(5, 0.01),
          FeasibleSet::Ball(Vec({1, -1, 0}), 2.0),
          FeasibleSet::Free(3),
          FeasibleSet::Product({FeasibleSet::Simplex(3, 0.0), FeasibleSet::Ball(Vec({0, 0}), 1),
                                FeasibleSet::Box(2, 0.0, 1.0)})};
}

TEST(FeasibleSetTest, ProjectionOfMemberIsIdentity) {
  std::mt19937_64 rng(1);
  for (const auto& set : Sets()) {
    SCOPED_TRACE(set.Describe());
    for (int k = 0; k < 50; ++k) {
      const Vector u = set.Sample(rng);
      ASSERT_TRUE(set.Contains(u));
      EXPECT_LE((set.Project(u) - u).norm(), 1e-14);
    }
    EXPECT_TRUE(set.Contains(set.Center()));
  }
}

TEST(FeasibleSetTest, ProjectionLandsInSetAndIsIdempotent) {
  std::mt19937_64 rng(2);
  for (const auto& set : Sets()) {
    SCOPED_TRACE(set.Describe());
    for (int k = 0; k < 50; ++k) {
      const Vector y = Gaussian(set.dimension(), rng, 3.0);
      const Vector p = set.Project(y);
      EXPECT_TRUE(set.Contains(p));
      EXPECT_LE((set.Project(p) - p).norm(), 1e-12);
      // Variational inequality of the projection: <y - p, u - p> <= 0.
      const Vector u = set.Sample(rng);
      EXPECT_LE((y - p).dot(u - p), 1e-10);
    }
  }
}

TEST(FeasibleSetTest, SimplexMembersRespectPadAndSum) {
  std::mt19937_64 rng(3);
  const FeasibleSet set = FeasibleSet::Simplex(6, 0.02);
  for (int k = 0; k < 100; ++k) {
    const Vector u = set.Project(Gaussian(6, rng, 5.0));
    EXPECT_NEAR(u.sum(), 1.0, 1e-12);
    EXPECT_GE(u.minCoeff(), 0.02);
  }
}

TEST(FeasibleSetTest, MembershipIsExact) {
  const FeasibleSet box = FeasibleSet::Box(2, 0.0, 1.0);
  EXPECT_TRUE(box.Contains(Vec({0.0, 1.0})));
  EXPECT_FALSE(box.Contains(Vec({-1e-300, 0.5})));
  const FeasibleSet simplex = FeasibleSet::Simplex(2, 0.1);
  EXPECT_FALSE(simplex.Contains(Vec({0.05, 0.95})));
  EXPECT_FALSE(simplex.Contains(Vec({0.5, 0.6})));
  EXPECT_FALSE(box.Contains(Vec({0.5})));
}

TEST(FeasibleSetTest, ProjectToSimplexHandValue) {
  // y = (1, 0): threshold 0 gives (1, 0); y = (0.6, 0.6): shift by 0.1.
  const Vector a = ProjectToSimplex(Vec({1.0, 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(a(0), 1.0);
  EXPECT_DOUBLE_EQ(a(1), 0.0);
  const Vector b = ProjectToSimplex(Vec({0.6, 0.6}), 0.0);
  EXPECT_NEAR(b(0), 0.5, 1e-15);
  EXPECT_NEAR(b(1), 0.5, 1e-15);
}

TEST(FeasibleSetTest, SupportMatchesSampledMaximum) {
  std::mt19937_64 rng(4);
  for (const auto& set : Sets()) {
    if (!set.IsBounded()) continue;
    SCOPED_TRACE(set.Describe());
    const Vector c = Gaussian(set.dimension(), rng);
    const double support = set.Support(c);
    for (int k = 0; k < 200; ++k) EXPECT_LE(c.dot(set.Sample(rng)), support + 1e-12);
  }
  EXPECT_EQ(FeasibleSet::Free(2).Support(Vec({0.0, 0.0})), 0.0);
  EXPECT_TRUE(std::isinf(FeasibleSet::Free(2).Support(Vec({1.0, 0.0}))));
}

TEST(FeasibleSetTest, ProductBookkeeping) {
  const FeasibleSet set =
      FeasibleSet::Product({FeasibleSet::Simplex(3), FeasibleSet::Simplex(2)});
  EXPECT_EQ(set.dimension(), 5);
  EXPECT_EQ(set.num_blocks(), 2);
  EXPECT_EQ(set.block_offset(1), 3);
  EXPECT_EQ(set.block_dim(1), 2);
  EXPECT_TRUE(set.AllSimplices());
  EXPECT_TRUE(set.IsBounded());
  EXPECT_FALSE(FeasibleSet::Free(1).IsBounded());
}

}  // namespace
}  // namespace ampvi
