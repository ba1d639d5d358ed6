// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef AMPVI_SOLVERS_H_
#define AMPVI_SOLVERS_H_

#include <functional>
#include <optional>
#include <vector>

#include "ampvi/geometry.h"
#include "ampvi/problems.h"
#include "ampvi/schedules.h"
#include "ampvi/stochastic_oracle.h"
#include "ampvi/types.h"

namespace ampvi {

// Iterates at the start of iteration t. After a step, `t` has advanced and
// `w_md` holds the midpoint that step used.
struct IterateState {
  int t = 1;
  Vector r;
  Vector w;
  Vector w_md;
  Vector w_ag;
  std::optional<Vector> w_v;  // stochastic runs only
};

IterateState InitialState(const Vector& start, bool stochastic = false);

struct OracleCounters {
  long grad_g_calls = 0;
  long h_calls = 0;
};

enum class HistoryMode { kFull, kFinalOnly };

enum class OutputKind {
  kWeighted,  // w^ag, the accelerated average
  kErgodic,   // uniform mean of w_2..w_{t+1}
};

struct Trajectory {
  // states[0] is the start (t = 1); states[k] follows k iterations. With
  // HistoryMode::kFinalOnly only the start and the final state are kept.
  std::vector<IterateState> states;
  NoiseLog noise;  // stochastic runs, one entry per iteration
  Schedule schedule;
  GeometrySetup geometry;
  OutputKind output_kind = OutputKind::kWeighted;
  OracleCounters counters;
  int iterations = 0;
  double wall_seconds = 0.0;

  const IterateState& initial() const { return states.front(); }
  const IterateState& final_state() const { return states.back(); }
  const Vector& output() const { return states.back().w_ag; }
};

// Called after every iteration with the new state and, for stochastic runs,
// the noise of that iteration.
using StepObserver =
    std::function<void(const IterateState& before, const IterateState& after,
                       const NoiseLogEntry* noise)>;

struct RunOptions {
  int iterations = 0;
  std::optional<Vector> start;  // default: FeasibleSet::Center()
  HistoryMode history = HistoryMode::kFull;
  bool keep_noise_log = true;
  StepObserver observer;
};

// One iteration of the deterministic method:
//   w_md    = (1 - alpha) w_ag + alpha r
//   w_{t+1} = prox_r(gamma (H(r) + grad G(w_md)), gamma J)
//   r_{t+1} = prox_r(gamma (H(w_{t+1}) + grad G(w_md)), gamma J)
//   w_ag    = (1 - alpha) w_ag + alpha w_{t+1}
IterateState AmpStepDet(const IterateState& state, const ProblemSpec& problem,
                        const GeometrySetup& geometry, double alpha, double gamma,
                        OracleCounters* counters = nullptr);

// The same step with noisy oracle outputs. Also advances the auxiliary
// point w_v by a prox step with direction -gamma (delta_H(w) + delta_G) and
// J = 0, using the true noise that only a simulator can see.
IterateState AmpStepStoch(const IterateState& state, StochasticOracle& oracle,
                          const GeometrySetup& geometry, double alpha, double gamma,
                          NoiseLogEntry* noise_out = nullptr,
                          OracleCounters* counters = nullptr);

// Runs t = 1..N and outputs w_ag at t = N + 1. Throws ConfigError when the
// schedule horizon is shorter than N.
Trajectory Run(const ProblemSpec& problem, const GeometrySetup& geometry,
               const Schedule& schedule, const RunOptions& options);
Trajectory Run(StochasticOracle& oracle, const GeometrySetup& geometry,
               const Schedule& schedule, const RunOptions& options);

// Mirror-prox baseline: alpha = 1 with grad G folded into the operator,
// so each iteration evaluates the full operator twice. `w_ag` holds the
// ergodic mean of w_2..w_{t+1}. Classical step condition gamma <= mu / L_F.
Trajectory RunMirrorProx(const ProblemSpec& problem, const GeometrySetup& geometry,
                         double fixed_gamma, const RunOptions& options);

}  // namespace ampvi

#endif  // AMPVI_SOLVERS_H_
