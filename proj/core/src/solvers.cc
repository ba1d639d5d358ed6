// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ampvi/solvers.h"

#include <chrono>

#include "ampvi/errors.h"

namespace ampvi {
namespace {

void CheckRunArgs(const FeasibleSet& set, const Schedule& schedule,
                  const RunOptions& options) {
  if (options.iterations < 1) throw InputError("a run needs at least one iteration");
  if (schedule.horizon() && *schedule.horizon() < options.iterations) {
    throw ConfigError("schedule horizon " + std::to_string(*schedule.horizon()) +
                      " is shorter than the requested " +
                      std::to_string(options.iterations) + " iterations");
  }
  if (options.start && !set.Contains(*options.start)) {
    throw InputError("start point is not a member of the feasible set");
  }
}

Vector StartPoint(const FeasibleSet& set, const RunOptions& options) {
  return options.start ? *options.start : set.Center();
}

void Record(Trajectory& traj, const RunOptions& options, IterateState state,
            bool last) {
  if (options.history == HistoryMode::kFull || last) {
    traj.states.push_back(std::move(state));
  }
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

IterateState InitialState(const Vector& start, bool stochastic) {
  IterateState s;
  s.t = 1;
  s.r = start;
  s.w = start;
  s.w_md = start;
  s.w_ag = start;
  if (stochastic) s.w_v = start;
  return s;
}

IterateState AmpStepDet(const IterateState& state, const ProblemSpec& problem,
                        const GeometrySetup& geometry, double alpha, double gamma,
                        OracleCounters* counters) {
  IterateState next;
  next.t = state.t + 1;
  next.w_md = (1.0 - alpha) * state.w_ag + alpha * state.r;
  const Vector grad = problem.GradG(next.w_md);
  const Vector eta_w = gamma * (problem.H(state.r) + grad);
  next.w = ProxMap(geometry, problem.set, state.r, eta_w, problem.simple, gamma);
  const Vector eta_r = gamma * (problem.H(next.w) + grad);
  next.r = ProxMap(geometry, problem.set, state.r, eta_r, problem.simple, gamma);
  next.w_ag = (1.0 - alpha) * state.w_ag + alpha * next.w;
  if (counters != nullptr) {
    counters->grad_g_calls += 1;
    counters->h_calls += 2;
  }
  return next;
}

IterateState AmpStepStoch(const IterateState& state, StochasticOracle& oracle,
                          const GeometrySetup& geometry, double alpha, double gamma,
                          NoiseLogEntry* noise_out, OracleCounters* counters) {
  const ProblemSpec& problem = oracle.problem();
  IterateState next;
  next.t = state.t + 1;
  next.w_md = (1.0 - alpha) * state.w_ag + alpha * state.r;
  OracleSample h_r = oracle.SampleH(state.r);
  OracleSample g_md = oracle.SampleGradG(next.w_md);
  const Vector eta_w = gamma * (h_r.value + g_md.value);
  next.w = ProxMap(geometry, problem.set, state.r, eta_w, problem.simple, gamma);
  OracleSample h_w = oracle.SampleH(next.w);
  const Vector eta_r = gamma * (h_w.value + g_md.value);
  next.r = ProxMap(geometry, problem.set, state.r, eta_r, problem.simple, gamma);
  next.w_ag = (1.0 - alpha) * state.w_ag + alpha * next.w;

  const Vector& w_v = state.w_v ? *state.w_v : state.r;
  if (oracle.sigma_g() == 0.0 && oracle.sigma_h() == 0.0) {
    next.w_v = w_v;
  } else {
    const Vector eta_v = -gamma * (h_w.delta + g_md.delta);
    next.w_v = ProxMap(geometry, problem.set, w_v, eta_v, SimpleTerm::Zero(), gamma);
  }

  if (counters != nullptr) {
    counters->grad_g_calls += 1;
    counters->h_calls += 2;
  }
  if (noise_out != nullptr) {
    *noise_out = {std::move(h_r.delta), std::move(h_w.delta), std::move(g_md.delta)};
  }
  return next;
}

Trajectory Run(const ProblemSpec& problem, const GeometrySetup& geometry,
               const Schedule& schedule, const RunOptions& options) {
  CheckRunArgs(problem.set, schedule, options);
  const auto clock = std::chrono::steady_clock::now();
  Trajectory traj;
  traj.schedule = schedule;
  traj.geometry = geometry;
  traj.iterations = options.iterations;
  IterateState state = InitialState(StartPoint(problem.set, options));
  traj.states.push_back(state);
  for (int t = 1; t <= options.iterations; ++t) {
    IterateState next = AmpStepDet(state, problem, geometry, schedule.alpha(t),
                                   schedule.gamma(t), &traj.counters);
    if (options.observer) options.observer(state, next, nullptr);
    state = std::move(next);
    Record(traj, options, state, t == options.iterations);
  }
  traj.wall_seconds = SecondsSince(clock);
  return traj;
}

Trajectory Run(StochasticOracle& oracle, const GeometrySetup& geometry,
               const Schedule& schedule, const RunOptions& options) {
  const ProblemSpec& problem = oracle.problem();
  CheckRunArgs(problem.set, schedule, options);
  const auto clock = std::chrono::steady_clock::now();
  Trajectory traj;
  traj.schedule = schedule;
  traj.geometry = geometry;
  traj.iterations = options.iterations;
  IterateState state = InitialState(StartPoint(problem.set, options), true);
  traj.states.push_back(state);
  if (options.keep_noise_log) traj.noise.reserve(options.iterations);
  for (int t = 1; t <= options.iterations; ++t) {
    NoiseLogEntry noise;
    IterateState next = AmpStepStoch(state, oracle, geometry, schedule.alpha(t),
                                     schedule.gamma(t), &noise, &traj.counters);
    if (options.observer) options.observer(state, next, &noise);
    if (options.keep_noise_log) traj.noise.push_back(std::move(noise));
    state = std::move(next);
    Record(traj, options, state, t == options.iterations);
  }
  traj.wall_seconds = SecondsSince(clock);
  return traj;
}

Trajectory RunMirrorProx(const ProblemSpec& problem, const GeometrySetup& geometry,
                         double fixed_gamma, const RunOptions& options) {
  if (!(fixed_gamma > 0.0)) throw ConfigError("mirror-prox step must be positive");
  const Schedule schedule =
      Schedule::Custom([](int) { return 1.0; }, [fixed_gamma](int) { return fixed_gamma; });
  CheckRunArgs(problem.set, schedule, options);
  const auto clock = std::chrono::steady_clock::now();
  Trajectory traj;
  traj.schedule = schedule;
  traj.geometry = geometry;
  traj.output_kind = OutputKind::kErgodic;
  traj.iterations = options.iterations;
  IterateState state = InitialState(StartPoint(problem.set, options));
  traj.states.push_back(state);
  Vector sum = Vector::Zero(problem.dimension());
  for (int t = 1; t <= options.iterations; ++t) {
    IterateState next;
    next.t = t + 1;
    next.w_md = state.r;
    next.w = ProxMap(geometry, problem.set, state.r, fixed_gamma * problem.F(state.r),
                     problem.simple, fixed_gamma);
    next.r = ProxMap(geometry, problem.set, state.r, fixed_gamma * problem.F(next.w),
                     problem.simple, fixed_gamma);
    sum += next.w;
    next.w_ag = sum / static_cast<double>(t);
    traj.counters.grad_g_calls += 2;
    traj.counters.h_calls += 2;
    if (options.observer) options.observer(state, next, nullptr);
    state = std::move(next);
    Record(traj, options, state, t == options.iterations);
  }
  traj.wall_seconds = SecondsSince(clock);
  return traj;
}

}  // namespace ampvi
