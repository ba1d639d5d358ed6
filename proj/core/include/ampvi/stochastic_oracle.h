// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef AMPVI_STOCHASTIC_ORACLE_H_
#define AMPVI_STOCHASTIC_ORACLE_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ampvi/problems.h"
#include "ampvi/types.h"

namespace ampvi {

enum class NoiseKind { kGaussian, kBoundedUniform };

std::string NoiseKindName(NoiseKind kind);
NoiseKind ParseNoiseKind(const std::string& name);

// Noise of one iteration, each entry equal to (oracle output - true value).
struct NoiseLogEntry {
  Vector delta_h_r;  // H at r_t
  Vector delta_h_w;  // H at w_{t+1}
  Vector delta_g;    // grad G at w^md_t
};

using NoiseLog = std::vector<NoiseLogEntry>;

struct OracleSample {
  Vector value;
  Vector delta;
};

// Unbiased noisy first-order oracle around a ProblemSpec.
//
// Both noise kinds use i.i.d. coordinates scaled so that E|delta|^2 <= sigma^2
// and E exp(|delta|^2 / sigma^2) <= e hold in the euclidean norm. The l_inf
// and blockwise-l_inf duals are dominated by the euclidean norm, so the same
// scaling certifies both moment bounds for every supported geometry.
//   gaussian:        per-coordinate std sigma / sqrt(2 d); for d = 1,
//                    sigma sqrt((1 - e^-2) / 2)
//   bounded-uniform: per-coordinate uniform on [-a, a], a = sigma / sqrt(d)
//
// Holds a mutable random stream: one oracle per run.
class StochasticOracle {
 public:
  StochasticOracle(const ProblemSpec& base, NoiseKind kind, double sigma_g,
                   double sigma_h, uint64_t seed);

  const ProblemSpec& problem() const { return base_; }
  NoiseKind kind() const { return kind_; }
  double sigma_g() const { return sigma_g_; }
  double sigma_h() const { return sigma_h_; }

  // Per-coordinate spread used for a given sigma: the standard deviation
  // for gaussian noise, the half-width for uniform noise.
  double CoordinateScale(double sigma) const;

  OracleSample SampleH(const Vector& u);
  OracleSample SampleGradG(const Vector& u);

  long h_calls() const { return h_calls_; }
  long g_calls() const { return g_calls_; }

 private:
  Vector Draw(double sigma);

  ProblemSpec base_;
  NoiseKind kind_;
  double sigma_g_;
  double sigma_h_;
  std::mt19937_64 engine_;
  long h_calls_ = 0;
  long g_calls_ = 0;
};

struct OracleTriple {
  Vector h_at_r;
  Vector h_at_w;
  Vector g_at_md;
  NoiseLogEntry log;
};

// The three draws of one stochastic iteration, in stream order: H at r,
// grad G at w^md, H at w. The solver interleaves a prox between the H calls,
// so it uses the single-call methods; this helper serves replay and tests.
OracleTriple SampleOracles(StochasticOracle& oracle, const Vector& point_r,
                           const Vector& point_w, const Vector& point_md);

}  // namespace ampvi

#endif  // AMPVI_STOCHASTIC_ORACLE_H_
