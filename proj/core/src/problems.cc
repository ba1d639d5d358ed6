// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ampvi/problems.h"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>

#include "ampvi/errors.h"

namespace ampvi {
namespace {

double SpectralNorm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Vector LogSpaced(int n, double low, double high) {
  Vector out(n);
  if (n == 1) {
    out[0] = high;
    return out;
  }
  const double a = std::log10(low);
  const double b = std::log10(high);
  for (int i = 0; i < n; ++i) out[i] = std::pow(10.0, a + (b - a) * i / (n - 1));
  out[n - 1] = high;
  return out;
}

Vector GaussianVector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector out(n);
  for (int i = 0; i < n; ++i) out[i] = normal(rng);
  return out;
}

Matrix GaussianMatrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix out(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) out(i, j) = normal(rng);
  }
  return out;
}

void RequireNonnegative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string(name) + " must be finite and nonnegative");
  }
}

ProblemSpec MakeQuadraticMin(int d, const InstanceConstants& c) {
  if (!c.geometry.is_euclidean()) {
    throw ConfigError("quadratic-min lives on a box and needs euclidean geometry");
  }
  Vector spectrum;
  if (!c.spectrum.empty()) {
    if (static_cast<int>(c.spectrum.size()) != d) {
      throw ConfigError("spectrum length must equal the dimension");
    }
    spectrum = Eigen::Map<const Vector>(c.spectrum.data(), d);
  } else {
    if (!(c.spectrum_min > 0.0) || c.spectrum_max < c.spectrum_min) {
      throw ConfigError("spectrum range must satisfy 0 < min <= max");
    }
    spectrum = LogSpaced(d, c.spectrum_min, c.spectrum_max);
  }
  if ((spectrum.array() < 0.0).any() || !spectrum.allFinite()) {
    throw ConfigError("requested spectrum is not positive semidefinite");
  }
  RequireNonnegative(c.l1_weight, "l1 weight");

  ProblemSpec p;
  p.kind = ProblemKind::kQuadraticMin;
  const Vector center = Vector::Constant(d, c.minimizer);
  p.smooth = std::make_shared<QuadraticTerm>(Matrix(spectrum.asDiagonal()), center,
                                             Vector::Zero(d));
  p.monotone = std::make_shared<ZeroOperator>(d);
  p.simple = c.l1_weight > 0.0 ? SimpleTerm::L1(c.l1_weight) : SimpleTerm::Zero();
  p.set = FeasibleSet::Box(d, c.box_lower, c.box_upper);
  p.lipschitz_g = spectrum.maxCoeff();
  p.lipschitz_h = 0.0;
  p.geometry = c.geometry;

  // Separable: each coordinate minimizes 0.5 p (x - c)^2 + lambda |x| on
  // [lo, hi].
  Vector solution(d);
  for (int i = 0; i < d; ++i) {
    double x = 0.0;
    if (spectrum[i] > 0.0) {
      const double y = center[i];
      const double shrink = c.l1_weight / spectrum[i];
      x = std::copysign(std::max(std::abs(y) - shrink, 0.0), y);
    }
    solution[i] = std::clamp(x, c.box_lower, c.box_upper);
  }
  p.known_solution = solution;
  return p;
}

ProblemSpec MakeBilinear(int n, const InstanceConstants& c, std::mt19937_64& rng) {
  Matrix a;
  switch (c.matrix) {
    case BilinearMatrix::kIdentity:
      a = Matrix::Identity(n, n);
      break;
    case BilinearMatrix::kGaussian:
      a = GaussianMatrix(n, n, rng);
      break;
    case BilinearMatrix::kLogSpectrum:
      if (!(c.spectrum_low > 0.0) || c.spectrum_low > 1.0) {
        throw ConfigError("log-spectrum lower value must lie in (0, 1]");
      }
      a = Matrix(LogSpaced(n, c.spectrum_low, 1.0).asDiagonal());
      break;
  }

  ProblemSpec p;
  p.kind = ProblemKind::kBilinearSaddle;
  p.geometry = c.geometry;
  auto op = std::make_shared<BilinearOperator>(a);
  p.monotone = op;
  p.simple = SimpleTerm::Zero();
  p.lipschitz_g = 0.0;

  if (c.domain == BilinearDomain::kSimplex) {
    p.set = FeasibleSet::Product(
        {FeasibleSet::Simplex(n, c.simplex_pad), FeasibleSet::Simplex(n, c.simplex_pad)});
    p.smooth = std::make_shared<QuadraticTerm>(QuadraticTerm::Zero(2 * n));
    // Dual of the blockwise l1 norm is blockwise l_inf; H maps l1 to l_inf
    // with constant max |a_ij|.
    p.lipschitz_h = c.geometry.is_euclidean() ? SpectralNorm(a) : a.cwiseAbs().maxCoeff();
    const bool diagonal_positive =
        a.isDiagonal(0.0) && (a.diagonal().array() > 0.0).all();
    if (diagonal_positive) {
      // Diagonal game: both players equalize 1/a_ii.
      Vector inv = a.diagonal().cwiseInverse();
      inv /= inv.sum();
      if ((inv.array() >= c.simplex_pad).all()) {
        Vector solution(2 * n);
        solution << inv, inv;
        p.known_solution = solution;
      }
    }
    return p;
  }

  if (!c.geometry.is_euclidean()) {
    throw ConfigError("bilinear ball domain needs euclidean geometry");
  }
  if (!(c.shift_norm >= 0.0) || c.shift_norm >= c.ball_radius) {
    throw ConfigError("solution shift must lie strictly inside the ball");
  }
  p.set = FeasibleSet::Product({FeasibleSet::Ball(Vector::Zero(n), c.ball_radius),
                                FeasibleSet::Ball(Vector::Zero(n), c.ball_radius)});
  Vector solution = Vector::Constant(2 * n, c.shift_norm / std::sqrt(n));
  // A linear G moves the saddle point to `solution`: grad G = -H(solution).
  p.smooth = std::make_shared<QuadraticTerm>(Matrix::Zero(2 * n, 2 * n),
                                             Vector::Zero(2 * n),
                                             -op->Apply(solution));
  p.lipschitz_h = SpectralNorm(a);
  p.known_solution = solution;
  return p;
}

ProblemSpec MakeSkewPlusGradient(int d, const InstanceConstants& c,
                                 std::mt19937_64& rng) {
  if (!c.geometry.is_euclidean()) {
    throw ConfigError("skew-plus-gradient lives on free space and needs euclidean geometry");
  }
  RequireNonnegative(c.skew_norm, "skew norm");
  RequireNonnegative(c.curvature, "curvature");
  RequireNonnegative(c.smooth_lipschitz, "smooth Lipschitz constant");
  RequireNonnegative(c.solution_scale, "solution scale");

  const Vector solution = c.solution_scale * GaussianVector(d, rng);
  const Vector shift = GaussianVector(d, rng);

  Matrix skew = Matrix::Zero(d, d);
  if (d > 1 && c.skew_norm > 0.0) {
    const Matrix b = GaussianMatrix(d, d, rng);
    skew = b - b.transpose();
    skew *= c.skew_norm / SpectralNorm(skew);
  }

  Matrix hessian = Matrix::Zero(d, d);
  if (c.smooth_lipschitz > 0.0) {
    Eigen::HouseholderQR<Matrix> qr(GaussianMatrix(d, d, rng));
    const Matrix q = qr.householderQ();
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    Vector spectrum(d);
    spectrum[0] = c.smooth_lipschitz;
    for (int i = 1; i < d; ++i) spectrum[i] = c.smooth_lipschitz * uniform(rng);
    hessian = q * spectrum.asDiagonal() * q.transpose();
    hessian = 0.5 * (hessian + hessian.transpose());
  }

  ProblemSpec p;
  p.kind = ProblemKind::kSkewPlusGradient;
  p.geometry = c.geometry;
  p.smooth = std::make_shared<QuadraticTerm>(hessian, solution, Vector::Zero(d));
  p.monotone =
      std::make_shared<SkewPlusGradientOperator>(skew, c.curvature, shift, solution);
  p.simple = SimpleTerm::Zero();
  p.set = FeasibleSet::Free(d);
  p.lipschitz_g = c.smooth_lipschitz;
  p.lipschitz_h = c.skew_norm + c.curvature;
  p.known_solution = solution;
  return p;
}

}  // namespace

QuadraticTerm::QuadraticTerm(Matrix hessian, Vector center, Vector linear)
    : hessian_(std::move(hessian)),
      center_(std::move(center)),
      linear_(std::move(linear)) {
  const auto n = center_.size();
  if (hessian_.rows() != n || hessian_.cols() != n || linear_.size() != n) {
    throw ConfigError("quadratic term has inconsistent sizes");
  }
  is_diagonal_ = hessian_.isDiagonal(0.0);
  is_affine_ = hessian_.isZero(0.0);
}

QuadraticTerm QuadraticTerm::Zero(int dim) {
  return QuadraticTerm(Matrix::Zero(dim, dim), Vector::Zero(dim), Vector::Zero(dim));
}

double QuadraticTerm::Value(const Vector& u) const {
  const Vector diff = u - center_;
  const double quad = is_diagonal_
                          ? diff.cwiseProduct(hessian_.diagonal()).dot(diff)
                          : diff.dot(hessian_ * diff);
  return 0.5 * quad + linear_.dot(u);
}

Vector QuadraticTerm::Gradient(const Vector& u) const {
  if (is_affine_) return linear_;
  if (is_diagonal_) {
    return hessian_.diagonal().cwiseProduct(u - center_) + linear_;
  }
  return hessian_ * (u - center_) + linear_;
}

Vector ZeroOperator::Apply(const Vector& u) const {
  if (u.size() != dim_) throw InputError("operator input has the wrong size");
  return Vector::Zero(dim_);
}

BilinearOperator::BilinearOperator(Matrix a) : a_(std::move(a)) {
  const auto m = a_.rows();
  const auto n = a_.cols();
  skew_ = Matrix::Zero(m + n, m + n);
  skew_.topRightCorner(m, n) = a_;
  skew_.bottomLeftCorner(n, m) = -a_.transpose();
}

Vector BilinearOperator::Apply(const Vector& u) const {
  const auto m = a_.rows();
  const auto n = a_.cols();
  if (u.size() != m + n) throw InputError("operator input has the wrong size");
  Vector out(m + n);
  out.head(m).noalias() = a_ * u.tail(n);
  out.tail(n).noalias() = -a_.transpose() * u.head(m);
  return out;
}

SkewPlusGradientOperator::SkewPlusGradientOperator(Matrix skew, double beta,
                                                   Vector shift, Vector anchor)
    : skew_(std::move(skew)),
      beta_(beta),
      shift_(std::move(shift)),
      anchor_(std::move(anchor)) {
  offset_ = beta_ * (anchor_ - shift_).array().tanh();
}

Vector SkewPlusGradientOperator::Apply(const Vector& u) const {
  if (u.size() != anchor_.size()) throw InputError("operator input has the wrong size");
  Vector out = skew_ * (u - anchor_);
  out.array() += beta_ * (u - shift_).array().tanh();
  out -= offset_;
  return out;
}

std::string ProblemKindName(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kQuadraticMin:
      return "quadratic-min";
    case ProblemKind::kBilinearSaddle:
      return "bilinear-saddle";
    case ProblemKind::kSkewPlusGradient:
      return "skew-plus-gradient";
    case ProblemKind::kCustom:
      return "custom";
  }
  return "custom";
}

ProblemKind ParseProblemKind(const std::string& name) {
  if (name == "quadratic-min") return ProblemKind::kQuadraticMin;
  if (name == "bilinear-saddle") return ProblemKind::kBilinearSaddle;
  if (name == "skew-plus-gradient") return ProblemKind::kSkewPlusGradient;
  throw ConfigError("unknown instance kind '" + name + "'");
}

ProblemSpec MakeInstance(ProblemKind kind, int dimension,
                         const InstanceConstants& constants, uint64_t seed) {
  if (dimension < 1) throw ConfigError("instance dimension must be positive");
  std::mt19937_64 rng(seed);
  switch (kind) {
    case ProblemKind::kQuadraticMin:
      return MakeQuadraticMin(dimension, constants);
    case ProblemKind::kBilinearSaddle:
      return MakeBilinear(dimension, constants, rng);
    case ProblemKind::kSkewPlusGradient:
      return MakeSkewPlusGradient(dimension, constants, rng);
    case ProblemKind::kCustom:
      break;
  }
  throw ConfigError("custom instances are assembled by hand, not by the factory");
}

double EvalQ(const ProblemSpec& problem, const Vector& u_tilde, const Vector& u) {
  return problem.G(u_tilde) - problem.G(u) + problem.H(u).dot(u_tilde - u) +
         problem.simple.Value(u_tilde) - problem.simple.Value(u);
}

}  // namespace ampvi
