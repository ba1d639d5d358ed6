// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ampvi/geometry.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ampvi/errors.h"

namespace ampvi {
namespace {

void CheckSameSize(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
}

Vector SoftThreshold(const Vector& y, double threshold) {
  return y.array().sign() * (y.array().abs() - threshold).max(0.0);
}

// Entropy prox on one padded simplex block: u_i = max(pad, c z_i e^{-eta_i})
// with c fixed by the sum constraint. Works in the log domain.
Vector EntropyProxBlock(const Vector& z, const Vector& eta, double pad) {
  const int n = static_cast<int>(z.size());
  if ((z.array() <= 0.0).any()) {
    throw DomainError("entropy prox center must have positive coordinates");
  }
  Vector logit = z.array().log() - eta.array();
  logit.array() -= logit.maxCoeff();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return logit[a] > logit[b]; });

  // Walk the free set down from all coordinates; the smallest logits get
  // clamped to the pad first.
  Vector weight = logit.array().exp();
  double free_weight = weight.sum();
  int free_count = n;
  double scale = 1.0 / free_weight;
  while (free_count > 1) {
    scale = (1.0 - (n - free_count) * pad) / free_weight;
    if (scale * weight[order[free_count - 1]] >= pad) break;
    free_weight -= weight[order[free_count - 1]];
    --free_count;
  }
  if (free_count == 1) scale = (1.0 - (n - 1) * pad) / free_weight;

  Vector u(n);
  for (int rank = 0; rank < n; ++rank) {
    const int i = order[rank];
    u[i] = rank < free_count ? std::max(pad, scale * weight[i]) : pad;
  }
  return u;
}

}  // namespace

SimpleTerm SimpleTerm::L1(double weight) {
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw ConfigError("l1 weight must be finite and nonnegative");
  }
  SimpleTerm term;
  term.kind_ = SimpleTermKind::kL1;
  term.weight_ = weight;
  return term;
}

double SimpleTerm::Value(const Vector& u) const {
  if (kind_ == SimpleTermKind::kZero) return 0.0;
  return weight_ * u.lpNorm<1>();
}

double PrimalNorm(const GeometrySetup& setup, const FeasibleSet& set,
                  const Vector& u) {
  if (setup.norm_kind == NormKind::kEuclidean) return u.norm();
  double total = 0.0;
  for (int k = 0; k < set.num_blocks(); ++k) {
    total += std::pow(u.segment(set.block_offset(k), set.block_dim(k)).lpNorm<1>(), 2);
  }
  return std::sqrt(total);
}

double DualNorm(const GeometrySetup& setup, const FeasibleSet& set,
                const Vector& eta) {
  if (setup.norm_kind == NormKind::kEuclidean) return eta.norm();
  double total = 0.0;
  for (int k = 0; k < set.num_blocks(); ++k) {
    total += std::pow(
        eta.segment(set.block_offset(k), set.block_dim(k)).lpNorm<Eigen::Infinity>(), 2);
  }
  return std::sqrt(total);
}

double BregmanValue(const GeometrySetup& setup, const Vector& z,
                    const Vector& u) {
  CheckSameSize(z, u);
  if (setup.is_euclidean()) return 0.5 * (u - z).squaredNorm();
  double total = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (!(z[i] > 0.0)) {
      throw DomainError("entropy divergence needs a positive center");
    }
    if (u[i] < 0.0) throw DomainError("entropy divergence of a negative point");
    const double log_term = u[i] > 0.0 ? u[i] * std::log(u[i] / z[i]) : 0.0;
    total += log_term - u[i] + z[i];
  }
  return std::max(total, 0.0);
}

Vector ProxMap(const GeometrySetup& setup, const FeasibleSet& set,
               const Vector& z, const Vector& eta, const SimpleTerm& j,
               double gamma) {
  if (z.size() != set.dimension() || eta.size() != set.dimension()) {
    throw InputError("prox inputs do not match the set dimension");
  }
  if (!eta.allFinite()) throw InputError("prox direction is not finite");
  if (!z.allFinite()) throw InputError("prox center is not finite");
  if (!(gamma > 0.0)) throw InputError("prox scaling must be positive");

  Vector out(set.dimension());
  const double threshold = j.is_zero() ? 0.0 : gamma * j.weight();
  for (int k = 0; k < set.num_blocks(); ++k) {
    const int off = set.block_offset(k);
    const int n = set.block_dim(k);
    const Vector zk = z.segment(off, n);
    const Vector ek = eta.segment(off, n);
    const SetBlock& block = set.block(k);

    if (!setup.is_euclidean()) {
      const auto* simplex = std::get_if<SimplexBlock>(&block);
      if (simplex == nullptr || !j.is_zero()) {
        throw ConfigError("entropy prox supports only simplices with J = 0");
      }
      out.segment(off, n) = EntropyProxBlock(zk, ek, simplex->pad);
      continue;
    }

    Vector y = zk - ek;
    if (const auto* box = std::get_if<BoxBlock>(&block)) {
      if (threshold > 0.0) y = SoftThreshold(y, threshold);
      out.segment(off, n) = y.cwiseMax(box->lower).cwiseMin(box->upper);
    } else if (const auto* ball = std::get_if<BallBlock>(&block)) {
      if (threshold > 0.0) {
        if (!ball->center.isZero(0.0)) {
          throw ConfigError("l1 prox on a ball requires a zero center");
        }
        y = SoftThreshold(y, threshold);
      }
      const double dist = (y - ball->center).norm();
      out.segment(off, n) =
          dist <= ball->radius ? y
                               : Vector(ball->center + (y - ball->center) * (ball->radius / dist));
    } else if (std::holds_alternative<FreeBlock>(block)) {
      out.segment(off, n) = threshold > 0.0 ? SoftThreshold(y, threshold) : y;
    } else {
      const auto& simplex = std::get<SimplexBlock>(block);
      if (!j.is_zero()) {
        throw ConfigError("euclidean prox on a simplex supports only J = 0");
      }
      out.segment(off, n) = ProjectToSimplex(y, simplex.pad);
    }
  }
  return out;
}

double ProxOptimalityResidual(const GeometrySetup& setup,
                              const FeasibleSet& /*set*/, const Vector& z,
                              const Vector& eta, const SimpleTerm& j,
                              double gamma, const Vector& w, const Vector& u) {
  const double linear = eta.dot(w - u) + gamma * (j.Value(w) - j.Value(u));
  const double three_point = BregmanValue(setup, z, u) -
                             BregmanValue(setup, z, w) -
                             BregmanValue(setup, w, u);
  return linear - three_point;
}

double OmegaSquared(const GeometrySetup& setup, const FeasibleSet& set) {
  double total = 0.0;
  for (int k = 0; k < set.num_blocks(); ++k) {
    const SetBlock& block = set.block(k);
    if (std::holds_alternative<FreeBlock>(block)) {
      throw DomainError("free space has no finite diameter");
    }
    if (setup.is_euclidean()) {
      if (const auto* box = std::get_if<BoxBlock>(&block)) {
        total += 0.5 * (box->upper - box->lower).squaredNorm();
      } else if (const auto* ball = std::get_if<BallBlock>(&block)) {
        total += 2.0 * ball->radius * ball->radius;
      } else {
        const auto& simplex = std::get<SimplexBlock>(block);
        if (simplex.dim > 1) total += std::pow(1.0 - simplex.dim * simplex.pad, 2);
      }
      continue;
    }
    const auto* simplex = std::get_if<SimplexBlock>(&block);
    if (simplex == nullptr) {
      throw ConfigError("entropy geometry is defined only on simplices");
    }
    if (simplex->dim == 1) continue;
    if (!(simplex->pad > 0.0)) {
      throw DomainError("entropy divergence is unbounded on an unpadded simplex");
    }
    // The divergence is jointly convex, so its sup sits at a pair of
    // distinct padded vertices.
    const double top = 1.0 - (simplex->dim - 1) * simplex->pad;
    total += (top - simplex->pad) * std::log(top / simplex->pad);
  }
  return total;
}

}  // namespace ampvi
