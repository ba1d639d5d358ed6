// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef AMPVI_SCHEDULES_H_
#define AMPVI_SCHEDULES_H_

#include <functional>
#include <optional>
#include <string>

namespace ampvi {

enum class Regime {
  kDetBounded,
  kDetUnbounded,
  kStochBounded,
  kStochUnbounded,
  kCustom,  // hand-supplied sequences, never validated (baselines, reductions)
};

std::string RegimeName(Regime regime);
Regime ParseRegime(const std::string& name);
bool IsStochastic(Regime regime);
bool IsUnbounded(Regime regime);

struct ScheduleConstants {
  double mu = 1.0;
  double lipschitz_g = 0.0;
  double lipschitz_h = 0.0;
  double sigma_g = 0.0;
  double sigma_h = 0.0;
  double omega = 0.0;           // Omega_Z, the square root of OmegaSquared
  int horizon = 0;              // N, unbounded regimes only
  double distance_guess = 0.0;  // D-tilde, stoch-unbounded only
  // Multiplies every published gamma_t. Values above 1 can break the regime
  // condition, which construction then reports.
  double gamma_scale = 1.0;

  double sigma() const;
};

// Stepsize policy (alpha_t, gamma_t) with Gamma_1 = 1,
// Gamma_t = (1 - alpha_t) Gamma_{t-1}. Sequences are evaluated lazily.
class Schedule {
 public:
  // An empty custom schedule; assign a real one before use.
  Schedule() = default;

  // The published schedule of a regime, with alpha_t = 2 / (t + 1):
  //   det-bounded      gamma_t = mu t / (2 (L_G + L_H t))
  //   det-unbounded    gamma_t = t / (3 (L_G + L_H N))
  //   stoch-bounded    gamma_t = mu t / (4 L_G + 3 L_H t
  //                                      + sigma (t+1) sqrt(mu t) / (sqrt2 Omega))
  //   stoch-unbounded  gamma_t = t / (5 L_G + 3 L_H N + sigma N sqrt(N-1) / D~)
  // Validates the regime condition and throws ScheduleError naming the first
  // failing t.
  static Schedule Make(Regime regime, const ScheduleConstants& constants);

  static Schedule Custom(std::function<double(int)> alpha,
                         std::function<double(int)> gamma,
                         std::optional<int> horizon = std::nullopt);

  Regime regime() const { return regime_; }
  const ScheduleConstants& constants() const { return constants_; }
  std::optional<int> horizon() const { return horizon_; }

  double alpha(int t) const;
  double gamma(int t) const;
  // Gamma_t. Closed form 2 / (t (t+1)) for published schedules.
  double big_gamma(int t) const;

  // Constants certified by the published parameter choice: c^2 = 2/3 and
  // 5/12 in the unbounded regimes, q = 5/6 in both stochastic regimes.
  double c_squared() const { return c_squared_; }
  double q() const { return q_; }

  // Throws ScheduleError at the first t where the regime condition fails.
  // Probes every t up to the horizon, or every t up to 1000 followed by a
  // logarithmic grid up to 1e6 when there is no horizon.
  void Validate() const;

 private:
  Regime regime_ = Regime::kCustom;
  ScheduleConstants constants_;
  std::optional<int> horizon_;
  std::function<double(int)> alpha_;
  std::function<double(int)> gamma_;
  double c_squared_ = 0.0;
  double q_ = 1.0;
};

// Gamma_t of the recursion driven by `alpha`. Throws InputError for t < 1.
double GammaSequence(const std::function<double(int)>& alpha, int t);

// Bounds for one t. Unused fields stay NaN. "printed" fields are the
// simplified corollary expressions, the others come straight from the
// theorems and are what the tests assert against.
struct TheoreticalBound {
  Regime regime = Regime::kCustom;
  int t = 0;

  double gap_bound;          // bounded regimes; expectation for stochastic
  double gap_bound_printed;

  double v_norm_bound;       // unbounded regimes; expectation for stochastic
  double eps_bound;
  double v_norm_bound_printed;
  double eps_bound_printed;
  double theta;              // theta_t (det) or theta (stoch)

  // Stochastic bounded: E g <= Q0, P{g > Q0 + lambda Q1} <= tail(lambda),
  // and the printed C0/C1, defined for t >= 2.
  double q0;
  double q1;
  double c0;
  double c1;

  TheoreticalBound();
};

// Extra quantities the bounds need. `omega_sq` for bounded regimes,
// `distance` (D = |r_1 - u*|) for unbounded ones.
struct BoundExtras {
  std::optional<double> omega_sq;
  std::optional<double> distance;
};

// Bound after t iterations, i.e. for the output w^ag_{t+1}. Throws
// ConfigError when a required extra is missing.
TheoreticalBound ComputeBound(const Schedule& schedule, int t,
                              const BoundExtras& extras);

// 2 exp(-lambda^2 / 3) + 3 exp(-lambda).
double TailProbabilityBound(double lambda);

}  // namespace ampvi

#endif  // AMPVI_SCHEDULES_H_
