// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef AMPVI_GEOMETRY_H_
#define AMPVI_GEOMETRY_H_

#include <string>

#include "ampvi/feasible_set.h"
#include "ampvi/types.h"

namespace ampvi {

// kL1 is the l1 norm on each simplex block, combined across blocks as
// sqrt(sum_k |u_k|_1^2). Its dual is sqrt(sum_k |eta_k|_inf^2).
enum class NormKind { kEuclidean, kL1 };

enum class DgfKind { kHalfSquaredNorm, kNegativeEntropy };

struct GeometrySetup {
  NormKind norm_kind = NormKind::kEuclidean;
  DgfKind dgf_kind = DgfKind::kHalfSquaredNorm;
  // Strong convexity modulus of the distance-generating function with
  // respect to norm_kind.
  double mu = 1.0;

  static GeometrySetup Euclidean() { return {}; }
  static GeometrySetup Entropy() {
    return {NormKind::kL1, DgfKind::kNegativeEntropy, 1.0};
  }

  bool is_euclidean() const { return dgf_kind == DgfKind::kHalfSquaredNorm; }
  std::string name() const { return is_euclidean() ? "euclidean" : "entropy"; }
};

enum class SimpleTermKind { kZero, kL1 };

// J(u) = weight * |u|_1, or zero.
class SimpleTerm {
 public:
  SimpleTerm() = default;
  static SimpleTerm Zero() { return SimpleTerm(); }
  static SimpleTerm L1(double weight);

  SimpleTermKind kind() const { return kind_; }
  double weight() const { return weight_; }
  bool is_zero() const { return kind_ == SimpleTermKind::kZero || weight_ == 0.0; }

  double Value(const Vector& u) const;

 private:
  SimpleTermKind kind_ = SimpleTermKind::kZero;
  double weight_ = 0.0;
};

double PrimalNorm(const GeometrySetup& setup, const FeasibleSet& set,
                  const Vector& u);
double DualNorm(const GeometrySetup& setup, const FeasibleSet& set,
                const Vector& eta);

// V(z, u) = omega(u) - omega(z) - <grad omega(z), u - z>. The entropy form
// is the generalized KL divergence, which reduces to sum u_i ln(u_i / z_i)
// on simplex blocks.
double BregmanValue(const GeometrySetup& setup, const Vector& z,
                    const Vector& u);

// argmin_{u in set} <eta, u - z> + V(z, u) + gamma * J(u).
//
// Supported cells:
//   euclidean: box, ball, free with J zero or l1 (l1 on a ball needs a zero
//              center); simplex with J zero.
//   entropy:   products of simplices with J zero.
// Anything else throws ConfigError.
Vector ProxMap(const GeometrySetup& setup, const FeasibleSet& set,
               const Vector& z, const Vector& eta, const SimpleTerm& j,
               double gamma);

// <eta, w - u> + gamma J(w) - gamma J(u) - [V(z,u) - V(z,w) - V(w,u)].
// Nonpositive up to rounding when w is the prox output for (z, eta).
double ProxOptimalityResidual(const GeometrySetup& setup,
                              const FeasibleSet& set, const Vector& z,
                              const Vector& eta, const SimpleTerm& j,
                              double gamma, const Vector& w, const Vector& u);

// Upper bound on sup_{z,u in set} V(z, u). Throws DomainError for free
// blocks and for the entropy on an unpadded simplex.
double OmegaSquared(const GeometrySetup& setup, const FeasibleSet& set);

}  // namespace ampvi

#endif  // AMPVI_GEOMETRY_H_
