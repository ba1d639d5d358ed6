// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef AMPVI_PROBLEMS_H_
#define AMPVI_PROBLEMS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ampvi/feasible_set.h"
#include "ampvi/geometry.h"
#include "ampvi/types.h"

namespace ampvi {

// Smooth convex part G of the operator.
class SmoothTerm {
 public:
  virtual ~SmoothTerm() = default;
  virtual double Value(const Vector& u) const = 0;
  virtual Vector Gradient(const Vector& u) const = 0;
};

// G(u) = 0.5 (u - c)^T P (u - c) + <b, u> with P symmetric PSD.
class QuadraticTerm : public SmoothTerm {
 public:
  QuadraticTerm(Matrix hessian, Vector center, Vector linear);
  static QuadraticTerm Zero(int dim);

  double Value(const Vector& u) const override;
  Vector Gradient(const Vector& u) const override;

  const Matrix& hessian() const { return hessian_; }
  const Vector& center() const { return center_; }
  const Vector& linear() const { return linear_; }
  bool is_diagonal() const { return is_diagonal_; }
  bool is_affine() const { return is_affine_; }

 private:
  Matrix hessian_;
  Vector center_;
  Vector linear_;
  bool is_diagonal_;
  bool is_affine_;
};

// Monotone Lipschitz part H of the operator.
class MonotoneOperator {
 public:
  virtual ~MonotoneOperator() = default;
  virtual Vector Apply(const Vector& u) const = 0;
  // Set for operators H(u) = M u with M skew-symmetric, which makes
  // <H(u), v - u> linear in u.
  virtual const Matrix* skew_matrix() const { return nullptr; }
};

class ZeroOperator : public MonotoneOperator {
 public:
  explicit ZeroOperator(int dim) : dim_(dim) {}
  Vector Apply(const Vector& u) const override;

 private:
  int dim_;
};

// u = (x, y) with x in R^m, y in R^n; H(u) = (A y, -A^T x).
class BilinearOperator : public MonotoneOperator {
 public:
  explicit BilinearOperator(Matrix a);
  Vector Apply(const Vector& u) const override;
  const Matrix* skew_matrix() const override { return &skew_; }
  const Matrix& a() const { return a_; }

 private:
  Matrix a_;
  Matrix skew_;
};

// H(u) = S (u - anchor) + beta (tanh(u - c) - tanh(anchor - c)), S skew.
// The second part is the gradient of the convex sum of beta log cosh(u_i - c_i),
// so H is monotone, nonlinear, beta-plus-|S| Lipschitz and H(anchor) = 0.
class SkewPlusGradientOperator : public MonotoneOperator {
 public:
  SkewPlusGradientOperator(Matrix skew, double beta, Vector shift, Vector anchor);
  Vector Apply(const Vector& u) const override;

 private:
  Matrix skew_;
  double beta_;
  Vector shift_;
  Vector anchor_;
  Vector offset_;
};

class FunctionOperator : public MonotoneOperator {
 public:
  explicit FunctionOperator(std::function<Vector(const Vector&)> fn)
      : fn_(std::move(fn)) {}
  Vector Apply(const Vector& u) const override { return fn_(u); }

 private:
  std::function<Vector(const Vector&)> fn_;
};

enum class ProblemKind { kQuadraticMin, kBilinearSaddle, kSkewPlusGradient, kCustom };

std::string ProblemKindName(ProblemKind kind);
ProblemKind ParseProblemKind(const std::string& name);

// Monotone VI with operator F = grad G + H + J' over a set.
struct ProblemSpec {
  ProblemKind kind = ProblemKind::kCustom;
  std::shared_ptr<const QuadraticTerm> smooth;
  std::shared_ptr<const MonotoneOperator> monotone;
  SimpleTerm simple;
  FeasibleSet set;
  // Constants in the dual norm of `geometry`.
  double lipschitz_g = 0.0;
  double lipschitz_h = 0.0;
  GeometrySetup geometry;
  std::optional<Vector> known_solution;

  int dimension() const { return set.dimension(); }
  double G(const Vector& u) const { return smooth->Value(u); }
  Vector GradG(const Vector& u) const { return smooth->Gradient(u); }
  Vector H(const Vector& u) const { return monotone->Apply(u); }
  Vector F(const Vector& u) const { return GradG(u) + H(u); }
};

enum class BilinearMatrix { kIdentity, kGaussian, kLogSpectrum };
enum class BilinearDomain { kSimplex, kBall };

// Knobs for MakeInstance. Each kind reads only its own group.
struct InstanceConstants {
  GeometrySetup geometry = GeometrySetup::Euclidean();

  // quadratic-min: diagonal Hessian on a box. An explicit spectrum wins;
  // otherwise `dimension` values are log-spaced over [min, max].
  std::vector<double> spectrum;
  double spectrum_min = 1.0;
  double spectrum_max = 1.0;
  double minimizer = 0.5;  // every coordinate of the unconstrained minimizer
  double box_lower = -1.0;
  double box_upper = 1.0;
  double l1_weight = 0.0;

  // bilinear-saddle: dimension is the size of each player's block.
  BilinearMatrix matrix = BilinearMatrix::kGaussian;
  BilinearDomain domain = BilinearDomain::kSimplex;
  double simplex_pad = 1e-6;
  double ball_radius = 2.0;
  double spectrum_low = 0.02;  // smallest singular value for kLogSpectrum
  double shift_norm = 1.0;     // |x*| = |y*| for the ball domain

  // skew-plus-gradient on free space.
  double skew_norm = 1.0;
  double curvature = 0.5;
  double smooth_lipschitz = 1.0;
  double solution_scale = 1.0;  // 0 puts the solution at the origin
};

ProblemSpec MakeInstance(ProblemKind kind, int dimension,
                         const InstanceConstants& constants, uint64_t seed);

// Q(u_tilde, u) = G(u_tilde) - G(u) + <H(u), u_tilde - u> + J(u_tilde) - J(u).
double EvalQ(const ProblemSpec& problem, const Vector& u_tilde, const Vector& u);

}  // namespace ampvi

#endif  // AMPVI_PROBLEMS_H_
