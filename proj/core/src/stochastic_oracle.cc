// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ampvi/stochastic_oracle.h"

#include <cmath>

#include "ampvi/errors.h"

namespace ampvi {

std::string NoiseKindName(NoiseKind kind) {
  return kind == NoiseKind::kGaussian ? "gaussian" : "bounded-uniform";
}

NoiseKind ParseNoiseKind(const std::string& name) {
  if (name == "gaussian") return NoiseKind::kGaussian;
  if (name == "bounded-uniform" || name == "uniform") return NoiseKind::kBoundedUniform;
  throw ConfigError("unknown noise kind '" + name + "'");
}

StochasticOracle::StochasticOracle(const ProblemSpec& base, NoiseKind kind,
                                   double sigma_g, double sigma_h, uint64_t seed)
    : base_(base), kind_(kind), sigma_g_(sigma_g), sigma_h_(sigma_h), engine_(seed) {
  if (!(sigma_g >= 0.0) || !(sigma_h >= 0.0) || !std::isfinite(sigma_g) ||
      !std::isfinite(sigma_h)) {
    throw ConfigError("noise levels must be finite and nonnegative");
  }
}

double StochasticOracle::CoordinateScale(double sigma) const {
  const double d = base_.dimension();
  if (kind_ == NoiseKind::kBoundedUniform) return sigma / std::sqrt(d);
  // E exp(|delta|^2 / sigma^2) = (1 - 2 v / sigma^2)^(-d/2) for variance v,
  // which is infinite at d = 1 with v = sigma^2 / 2. There the largest
  // variance meeting the bound is used instead.
  if (d == 1.0) return sigma * std::sqrt(0.5 * (1.0 - std::exp(-2.0)));
  return sigma / std::sqrt(2.0 * d);
}

Vector StochasticOracle::Draw(double sigma) {
  const int d = base_.dimension();
  // Zero noise consumes no randomness and adds nothing, so outputs match the
  // exact operator bit for bit.
  if (sigma == 0.0) return Vector::Zero(d);
  const double scale = CoordinateScale(sigma);
  Vector out(d);
  if (kind_ == NoiseKind::kGaussian) {
    std::normal_distribution<double> normal(0.0, scale);
    for (int i = 0; i < d; ++i) out[i] = normal(engine_);
  } else {
    std::uniform_real_distribution<double> uniform(-scale, scale);
    for (int i = 0; i < d; ++i) out[i] = uniform(engine_);
  }
  return out;
}

OracleSample StochasticOracle::SampleH(const Vector& u) {
  ++h_calls_;
  OracleSample sample;
  sample.delta = Draw(sigma_h_);
  sample.value = base_.H(u);
  if (sigma_h_ != 0.0) sample.value += sample.delta;
  return sample;
}

OracleSample StochasticOracle::SampleGradG(const Vector& u) {
  ++g_calls_;
  OracleSample sample;
  sample.delta = Draw(sigma_g_);
  sample.value = base_.GradG(u);
  if (sigma_g_ != 0.0) sample.value += sample.delta;
  return sample;
}

OracleTriple SampleOracles(StochasticOracle& oracle, const Vector& point_r,
                           const Vector& point_w, const Vector& point_md) {
  OracleTriple out;
  OracleSample h_r = oracle.SampleH(point_r);
  OracleSample g_md = oracle.SampleGradG(point_md);
  OracleSample h_w = oracle.SampleH(point_w);
  out.h_at_r = std::move(h_r.value);
  out.h_at_w = std::move(h_w.value);
  out.g_at_md = std::move(g_md.value);
  out.log = {std::move(h_r.delta), std::move(h_w.delta), std::move(g_md.delta)};
  return out;
}

}  // namespace ampvi
