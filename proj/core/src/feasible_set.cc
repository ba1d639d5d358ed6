// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ampvi/feasible_set.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "ampvi/errors.h"

namespace ampvi {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckSize(const Vector& u, int dim) {
  if (u.size() != dim) {
    throw InputError("vector of size " + std::to_string(u.size()) +
                     " does not match set dimension " + std::to_string(dim));
  }
}

}  // namespace

Vector ProjectToSimplex(const Vector& y, double pad) {
  const int n = static_cast<int>(y.size());
  const double mass = 1.0 - n * pad;
  Vector shifted = y.array() - pad;
  Vector sorted = shifted;
  std::sort(sorted.data(), sorted.data() + n, std::greater<double>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (int k = 0; k < n; ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - mass) / (k + 1);
    if (k == n - 1 || sorted[k + 1] <= candidate) {
      theta = candidate;
      break;
    }
  }
  Vector u = (shifted.array() - theta).max(0.0) + pad;
  return u;
}

FeasibleSet FeasibleSet::Box(Vector lower, Vector upper) {
  if (lower.size() != upper.size() || lower.size() == 0) {
    throw ConfigError("box bounds must be non-empty and of equal size");
  }
  if (!lower.allFinite() || !upper.allFinite() ||
      (upper.array() < lower.array()).any()) {
    throw ConfigError("box bounds must be finite with lower <= upper");
  }
  FeasibleSet set;
  set.Append(BoxBlock{std::move(lower), std::move(upper)});
  return set;
}

FeasibleSet FeasibleSet::Box(int dim, double lower, double upper) {
  if (dim < 1) throw ConfigError("box dimension must be positive");
  return Box(Vector::Constant(dim, lower), Vector::Constant(dim, upper));
}

FeasibleSet FeasibleSet::Simplex(int dim, double pad) {
  if (dim < 1) throw ConfigError("simplex dimension must be positive");
  if (!(pad >= 0.0) || dim * pad > 1.0) {
    throw ConfigError("simplex pad must satisfy 0 <= pad <= 1/dim");
  }
  FeasibleSet set;
  set.Append(SimplexBlock{dim, pad});
  return set;
}

FeasibleSet FeasibleSet::Ball(Vector center, double radius) {
  if (center.size() == 0 || !center.allFinite()) {
    throw ConfigError("ball center must be a non-empty finite vector");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw ConfigError("ball radius must be positive and finite");
  }
  FeasibleSet set;
  set.Append(BallBlock{std::move(center), radius});
  return set;
}

FeasibleSet FeasibleSet::Free(int dim) {
  if (dim < 1) throw ConfigError("free space dimension must be positive");
  FeasibleSet set;
  set.Append(FreeBlock{dim});
  return set;
}

FeasibleSet FeasibleSet::Product(const std::vector<FeasibleSet>& parts) {
  if (parts.empty()) throw ConfigError("product of zero sets");
  FeasibleSet set;
  for (const FeasibleSet& part : parts) {
    for (const SetBlock& block : part.blocks_) set.Append(block);
  }
  return set;
}

void FeasibleSet::Append(SetBlock block) {
  offsets_.push_back(dimension_);
  blocks_.push_back(std::move(block));
  dimension_ += block_dim(num_blocks() - 1);
}

int FeasibleSet::block_dim(int k) const {
  return std::visit(
      Overloaded{[](const BoxBlock& b) { return static_cast<int>(b.lower.size()); },
                 [](const SimplexBlock& b) { return b.dim; },
                 [](const BallBlock& b) { return static_cast<int>(b.center.size()); },
                 [](const FreeBlock& b) { return b.dim; }},
      blocks_[k]);
}

bool FeasibleSet::IsBounded() const {
  return std::none_of(blocks_.begin(), blocks_.end(), [](const SetBlock& b) {
    return std::holds_alternative<FreeBlock>(b);
  });
}

bool FeasibleSet::AllSimplices() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const SetBlock& b) {
    return std::holds_alternative<SimplexBlock>(b);
  });
}

bool FeasibleSet::Contains(const Vector& u) const {
  if (u.size() != dimension_ || !u.allFinite()) return false;
  for (int k = 0; k < num_blocks(); ++k) {
    const auto part = u.segment(offsets_[k], block_dim(k));
    const bool ok = std::visit(
        Overloaded{
            [&](const BoxBlock& b) {
              return (part.array() >= b.lower.array()).all() &&
                     (part.array() <= b.upper.array()).all();
            },
            [&](const SimplexBlock& b) {
              return (part.array() >= b.pad).all() &&
                     std::abs(part.sum() - 1.0) <= 1e-12;
            },
            [&](const BallBlock& b) {
              return (part - b.center).norm() <= b.radius * (1.0 + 1e-12);
            },
            [](const FreeBlock&) { return true; }},
        blocks_[k]);
    if (!ok) return false;
  }
  return true;
}

Vector FeasibleSet::Project(const Vector& u) const {
  CheckSize(u, dimension_);
  Vector out(dimension_);
  for (int k = 0; k < num_blocks(); ++k) {
    const int off = offsets_[k];
    const int n = block_dim(k);
    const Vector part = u.segment(off, n);
    out.segment(off, n) = std::visit(
        Overloaded{
            [&](const BoxBlock& b) -> Vector {
              return part.cwiseMax(b.lower).cwiseMin(b.upper);
            },
            [&](const SimplexBlock& b) -> Vector {
              return ProjectToSimplex(part, b.pad);
            },
            [&](const BallBlock& b) -> Vector {
              const double dist = (part - b.center).norm();
              if (dist <= b.radius) return part;
              return b.center + (part - b.center) * (b.radius / dist);
            },
            [&](const FreeBlock&) -> Vector { return part; }},
        blocks_[k]);
  }
  return out;
}

Vector FeasibleSet::Center() const {
  Vector out(dimension_);
  for (int k = 0; k < num_blocks(); ++k) {
    const int n = block_dim(k);
    out.segment(offsets_[k], n) = std::visit(
        Overloaded{
            [](const BoxBlock& b) -> Vector { return 0.5 * (b.lower + b.upper); },
            [](const SimplexBlock& b) -> Vector {
              return Vector::Constant(b.dim, 1.0 / b.dim);
            },
            [](const BallBlock& b) -> Vector { return b.center; },
            [](const FreeBlock& b) -> Vector { return Vector::Zero(b.dim); }},
        blocks_[k]);
  }
  return out;
}

double FeasibleSet::Support(const Vector& c) const {
  CheckSize(c, dimension_);
  double total = 0.0;
  for (int k = 0; k < num_blocks(); ++k) {
    const Vector part = c.segment(offsets_[k], block_dim(k));
    total += std::visit(
        Overloaded{
            [&](const BoxBlock& b) {
              return part.cwiseProduct(b.lower)
                  .cwiseMax(part.cwiseProduct(b.upper))
                  .sum();
            },
            [&](const SimplexBlock& b) {
              return b.pad * part.sum() + (1.0 - b.dim * b.pad) * part.maxCoeff();
            },
            [&](const BallBlock& b) {
              return part.dot(b.center) + b.radius * part.norm();
            },
            [&](const FreeBlock&) {
              return part.isZero(0.0) ? 0.0
                                      : std::numeric_limits<double>::infinity();
            }},
        blocks_[k]);
  }
  return total;
}

Vector FeasibleSet::Sample(std::mt19937_64& rng, double free_scale) const {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::exponential_distribution<double> exponential(1.0);
  Vector out(dimension_);
  for (int k = 0; k < num_blocks(); ++k) {
    const int n = block_dim(k);
    Vector part(n);
    std::visit(
        Overloaded{
            [&](const BoxBlock& b) {
              for (int i = 0; i < n; ++i) {
                part[i] = b.lower[i] + (b.upper[i] - b.lower[i]) * uniform(rng);
              }
              part = part.cwiseMax(b.lower).cwiseMin(b.upper);
            },
            [&](const SimplexBlock& b) {
              for (int i = 0; i < n; ++i) part[i] = exponential(rng);
              part /= part.sum();
              part = (part.array() * (1.0 - n * b.pad) + b.pad).matrix();
              // Absorb rounding so the sum is 1 to working precision.
              part = ProjectToSimplex(part, b.pad);
            },
            [&](const BallBlock& b) {
              for (int i = 0; i < n; ++i) part[i] = normal(rng);
              const double radius =
                  b.radius * std::pow(uniform(rng), 1.0 / n) * (1.0 - 1e-12);
              part = b.center + part * (radius / part.norm());
            },
            [&](const FreeBlock&) {
              for (int i = 0; i < n; ++i) part[i] = free_scale * normal(rng);
            }},
        blocks_[k]);
    out.segment(offsets_[k], n) = part;
  }
  return out;
}

std::string FeasibleSet::Describe() const {
  std::ostringstream os;
  for (int k = 0; k < num_blocks(); ++k) {
    if (k > 0) os << " x ";
    std::visit(Overloaded{[&](const BoxBlock& b) { os << "box(" << b.lower.size() << ")"; },
                          [&](const SimplexBlock& b) {
                            os << "simplex(" << b.dim << ", pad=" << b.pad << ")";
                          },
                          [&](const BallBlock& b) {
                            os << "ball(" << b.center.size() << ", R=" << b.radius << ")";
                          },
                          [&](const FreeBlock& b) { os << "free(" << b.dim << ")"; }},
               blocks_[k]);
  }
  return os.str();
}

}  // namespace ampvi
