// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef AMPVI_FEASIBLE_SET_H_
#define AMPVI_FEASIBLE_SET_H_

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ampvi/types.h"

namespace ampvi {

struct BoxBlock {
  Vector lower;
  Vector upper;
};

// {u : sum(u) = 1, u_i >= pad}.
struct SimplexBlock {
  int dim = 0;
  double pad = 0.0;
};

struct BallBlock {
  Vector center;
  double radius = 0.0;
};

struct FreeBlock {
  int dim = 0;
};

using SetBlock = std::variant<BoxBlock, SimplexBlock, BallBlock, FreeBlock>;

// A closed convex set, stored as a Cartesian product of simple blocks. A
// single box, simplex, ball or free space is a product with one block.
class FeasibleSet {
 public:
  static FeasibleSet Box(Vector lower, Vector upper);
  static FeasibleSet Box(int dim, double lower, double upper);
  static FeasibleSet Simplex(int dim, double pad = 0.0);
  static FeasibleSet Ball(Vector center, double radius);
  static FeasibleSet Free(int dim);
  // Concatenates the blocks of `parts` in order.
  static FeasibleSet Product(const std::vector<FeasibleSet>& parts);

  int dimension() const { return dimension_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const SetBlock& block(int k) const { return blocks_[k]; }
  int block_offset(int k) const { return offsets_[k]; }
  int block_dim(int k) const;

  bool IsBounded() const;
  bool AllSimplices() const;

  // Exact membership: box bounds and the simplex pad are compared without
  // tolerance, the simplex sum within 1e-12 and the ball radius within a
  // relative 1e-12.
  bool Contains(const Vector& u) const;

  // Euclidean projection.
  Vector Project(const Vector& u) const;

  // Box and ball centers, the simplex barycenter, the origin of free space.
  Vector Center() const;

  // sup_{u in set} <c, u>; infinite for free blocks with c != 0.
  double Support(const Vector& c) const;

  // A random member, used by property tests and probe sets. Free blocks
  // draw Gaussian coordinates with standard deviation `free_scale`.
  Vector Sample(std::mt19937_64& rng, double free_scale = 1.0) const;

  std::string Describe() const;

 private:
  void Append(SetBlock block);

  std::vector<SetBlock> blocks_;
  std::vector<int> offsets_;
  int dimension_ = 0;
};

// Euclidean projection of y onto {u : sum(u) = 1, u_i >= pad}.
Vector ProjectToSimplex(const Vector& y, double pad);

}  // namespace ampvi

#endif  // AMPVI_FEASIBLE_SET_H_
