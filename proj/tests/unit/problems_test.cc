// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ampvi/problems.h"

#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "ampvi/errors.h"
#include "ampvi/geometry.h"
#include "test_util.h"

namespace ampvi {
namespace {

using ::ampvi::testing::HalfSquare;
using ::ampvi::testing::IdentityGame;
using ::ampvi::testing::Vec;

TEST(InstanceTest, QuadraticTwoDimensional) {
  InstanceConstants c;
  c.spectrum = {1.0, 10.0};
  c.minimizer = 1.7;  // outside the box [-1, 1]
  const ProblemSpec p = MakeInstance(ProblemKind::kQuadraticMin, 2, c, 0);
  EXPECT_DOUBLE_EQ(p.lipschitz_g, 10.0);
  EXPECT_DOUBLE_EQ(p.lipschitz_h, 0.0);
  EXPECT_EQ(p.H(Vec({0.3, -0.2})).norm(), 0.0);

  // Oracle: the largest eigenvalue of the Hessian, and the unconstrained
  // minimizer from grad G = 0 projected onto the box.
  const Matrix hess = p.smooth->hessian();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hess);
  EXPECT_NEAR(eig.eigenvalues().maxCoeff(), p.lipschitz_g, 1e-12);
  const Vector unconstrained = hess.ldlt().solve(hess * p.smooth->center());
  ASSERT_TRUE(p.known_solution.has_value());
  EXPECT_TRUE(p.known_solution->isApprox(p.set.Project(unconstrained), 1e-12));
  EXPECT_DOUBLE_EQ((*p.known_solution)(0), 1.0);
}

TEST(InstanceTest, IdentityGameOnSimplices) {
  InstanceConstants c;
  c.matrix = BilinearMatrix::kIdentity;
  c.simplex_pad = 0.0;
  const ProblemSpec p = MakeInstance(ProblemKind::kBilinearSaddle, 2, c, 0);
  EXPECT_DOUBLE_EQ(p.lipschitz_g, 0.0);
  EXPECT_DOUBLE_EQ(p.lipschitz_h, 1.0);
  ASSERT_TRUE(p.known_solution.has_value());
  EXPECT_TRUE(p.known_solution->isApprox(Vector::Constant(4, 0.5)));
  // Equilibrium conditions: each player is indifferent between pure strategies.
  const Vector h = p.H(*p.known_solution);
  EXPECT_DOUBLE_EQ(h(0), h(1));
  EXPECT_DOUBLE_EQ(h(2), h(3));
}

TEST(InstanceTest, SkewWithSolutionAtOrigin) {
  InstanceConstants c;
  c.solution_scale = 0.0;
  const ProblemSpec p = MakeInstance(ProblemKind::kSkewPlusGradient, 4, c, 9);
  EXPECT_LE(p.F(Vector::Zero(4)).norm(), 1e-15);
  EXPECT_FALSE(p.set.IsBounded());
}

TEST(InstanceTest, SameSeedSameInstance) {
  InstanceConstants c;
  const ProblemSpec a = MakeInstance(ProblemKind::kSkewPlusGradient, 5, c, 3);
  const ProblemSpec b = MakeInstance(ProblemKind::kSkewPlusGradient, 5, c, 3);
  const Vector u = Vector::LinSpaced(5, -1.0, 1.0);
  EXPECT_EQ(a.F(u), b.F(u));
  EXPECT_EQ(*a.known_solution, *b.known_solution);
}

TEST(InstanceTest, InvalidConstantsThrow) {
  InstanceConstants c;
  c.spectrum = {1.0};
  EXPECT_THROW(MakeInstance(ProblemKind::kQuadraticMin, 2, c, 0), ConfigError);
  InstanceConstants ball;
  ball.domain = BilinearDomain::kBall;
  ball.shift_norm = 3.0;
  EXPECT_THROW(MakeInstance(ProblemKind::kBilinearSaddle, 3, ball, 0), ConfigError);
  EXPECT_THROW(MakeInstance(ProblemKind::kCustom, 3, InstanceConstants{}, 0), ConfigError);
  EXPECT_THROW(MakeInstance(ProblemKind::kQuadraticMin, 0, InstanceConstants{}, 0),
               ConfigError);
}

TEST(InstanceTest, KindNamesRoundTrip) {
  for (ProblemKind k : {ProblemKind::kQuadraticMin, ProblemKind::kBilinearSaddle,
                        ProblemKind::kSkewPlusGradient}) {
    EXPECT_EQ(ParseProblemKind(ProblemKindName(k)), k);
  }
  EXPECT_THROW(ParseProblemKind("nope"), ConfigError);
}

TEST(QTest, HandValues) {
  const ProblemSpec game = IdentityGame();
  const Vector u = Vector::Constant(4, 0.5);
  EXPECT_DOUBLE_EQ(EvalQ(game, u, u), 0.0);
  // <H(u), u_tilde - u> with H(u) = (A y, -A^T x) = (0.5, 0.5, -0.5, -0.5).
  EXPECT_DOUBLE_EQ(EvalQ(game, Vec({1, 0, 1, 0}), u), 0.0);
  const ProblemSpec half = HalfSquare(FeasibleSet::Free(1));
  EXPECT_DOUBLE_EQ(EvalQ(half, Vec({1.0}), Vec({0.0})), 0.5);
}

struct Case {
  const char* name;
  ProblemKind kind;
  int dim;
  InstanceConstants constants;
};

std::vector<Case> Cases() {
  std::vector<Case> cases;
  InstanceConstants quad;
  quad.spectrum_min = 0.1;
  quad.spectrum_max = 50.0;
  quad.l1_weight = 0.3;
  cases.push_back({"quadratic-l1", ProblemKind::kQuadraticMin, 6, quad});
  InstanceConstants ent;
  ent.geometry = GeometrySetup::Entropy();
  cases.push_back({"bilinear-entropy", ProblemKind::kBilinearSaddle, 4, ent});
  InstanceConstants euc_simplex;
  cases.push_back({"bilinear-euclidean", ProblemKind::kBilinearSaddle, 4, euc_simplex});
  InstanceConstants ball;
  ball.domain = BilinearDomain::kBall;
  ball.matrix = BilinearMatrix::kLogSpectrum;
  cases.push_back({"bilinear-ball", ProblemKind::kBilinearSaddle, 5, ball});
  InstanceConstants skew;
  skew.smooth_lipschitz = 3.0;
  skew.curvature = 0.7;
  cases.push_back({"skew", ProblemKind::kSkewPlusGradient, 6, skew});
  return cases;
}

// Convexity and smoothness of G, monotonicity and Lipschitz continuity of H
// in the instance's geometry, and the strong-solution inequality.
TEST(InstancePropertyTest, ContractsHoldOnRandomPairs) {
  std::mt19937_64 rng(77);
  for (const Case& cs : Cases()) {
    SCOPED_TRACE(cs.name);
    const ProblemSpec p = MakeInstance(cs.kind, cs.dim, cs.constants, 5);
    const GeometrySetup& geo = cs.constants.geometry;
    for (int k = 0; k < 200; ++k) {
      const Vector v = p.set.Sample(rng, 2.0);
      const Vector w = p.set.Sample(rng, 2.0);
      const double bregman_g = p.G(v) - p.G(w) - p.GradG(w).dot(v - w);
      const double nv = PrimalNorm(geo, p.set, v - w);
      EXPECT_GE(bregman_g, -1e-12);
      EXPECT_LE(bregman_g, 0.5 * p.lipschitz_g * nv * nv * (1.0 + 1e-12) + 1e-12);
      const Vector dh = p.H(w) - p.H(v);
      EXPECT_GE(dh.dot(w - v), -1e-12);
      EXPECT_LE(DualNorm(geo, p.set, dh), p.lipschitz_h * nv * (1.0 + 1e-12) + 1e-14);
    }
    if (!p.known_solution) continue;
    const Vector& s = *p.known_solution;
    ASSERT_TRUE(p.set.Contains(s));
    const Vector fs = p.F(s);
    for (int k = 0; k < 200; ++k) {
      const Vector u = p.set.Sample(rng, 2.0);
      EXPECT_LE(fs.dot(s - u) + p.simple.Value(s) - p.simple.Value(u), 1e-9);
    }
  }
}

}  // namespace
}  // namespace ampvi
