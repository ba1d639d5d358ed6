// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ampvi/errors.h"
#include "ampvi/evaluation.h"
#include "ampvi/geometry.h"
#include "ampvi/harness/config.h"
#include "ampvi/harness/experiment.h"
#include "ampvi/problems.h"
#include "ampvi/schedules.h"
#include "ampvi/solvers.h"
#include "ampvi/stochastic_oracle.h"

namespace ampvi {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string Format(const char* fmt, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c, d);
  return buf;
}

// Largest deviation of w_ag from Gamma_t sum_i (alpha_i / Gamma_i) w_{i+1}
// seen on any full-history trajectory produced by this binary.
double g_aggregation_error = 0.0;
int g_aggregation_trajectories = 0;

void TrackAggregation(const Trajectory& traj) {
  const Schedule& s = traj.schedule;
  Vector weighted = Vector::Zero(traj.initial().r.size());
  for (size_t t = 1; t < traj.states.size(); ++t) {
    const int ti = static_cast<int>(t);
    weighted += s.alpha(ti) / s.big_gamma(ti) * traj.states[t].w;
    const double err =
        (s.big_gamma(ti) * weighted - traj.states[t].w_ag).cwiseAbs().maxCoeff();
    g_aggregation_error = std::max(g_aggregation_error, err);
  }
  ++g_aggregation_trajectories;
}

Trajectory RunTracked(const ProblemSpec& p, const GeometrySetup& g, const Schedule& s, int n,
                      std::optional<Vector> start = std::nullopt) {
  RunOptions o;
  o.iterations = n;
  o.start = std::move(start);
  Trajectory traj = Run(p, g, s, o);
  TrackAggregation(traj);
  return traj;
}

Trajectory RunTracked(StochasticOracle& oracle, const GeometrySetup& g, const Schedule& s,
                      int n) {
  RunOptions o;
  o.iterations = n;
  Trajectory traj = Run(oracle, g, s, o);
  TrackAggregation(traj);
  return traj;
}

Schedule DetBounded(const ProblemSpec& p, const GeometrySetup& g) {
  ScheduleConstants k;
  k.mu = g.mu;
  k.lipschitz_g = p.lipschitz_g;
  k.lipschitz_h = p.lipschitz_h;
  k.omega = std::sqrt(OmegaSquared(g, p.set));
  return Schedule::Make(Regime::kDetBounded, k);
}

// Worst gap(w_ag_{t+1}) / ((alpha_t / gamma_t) Omega^2) over t <= n.
double WorstBoundRatio(const ProblemSpec& p, const GeometrySetup& g, int n) {
  const Schedule s = DetBounded(p, g);
  const Trajectory traj = RunTracked(p, g, s, n);
  const double omega_sq = OmegaSquared(g, p.set);
  double worst = 0.0;
  for (int t = 1; t <= n; ++t) {
    const double gap = GapBounded(p, traj.states[t].w_ag).value;
    worst = std::max(worst, gap / (s.alpha(t) / s.gamma(t) * omega_sq));
  }
  return worst;
}

Outcome PerIterationBound() {
  InstanceConstants q;
  q.spectrum_min = 1.0;
  q.spectrum_max = 100.0;
  q.minimizer = 1.5;  // outside the box, so the constraint is active
  const ProblemSpec quad = MakeInstance(ProblemKind::kQuadraticMin, 10, q, 1);

  InstanceConstants b;
  b.geometry = GeometrySetup::Entropy();
  b.matrix = BilinearMatrix::kGaussian;
  const ProblemSpec game = MakeInstance(ProblemKind::kBilinearSaddle, 10, b, 3);

  const double rq = WorstBoundRatio(quad, GeometrySetup::Euclidean(), 500);
  const double rb = WorstBoundRatio(game, b.geometry, 500);
  Outcome o;
  o.pass = quad.lipschitz_g == 100.0 && rq <= 1.0 + 1e-8 && rb <= 1.0 + 1e-8;
  o.detail = Format("max gap/bound: quadratic %.4g, bilinear %.4g (limit 1+1e-8)", rq, rb);
  return o;
}

ExperimentConfig StiffQuadratic(int iterations) {
  ExperimentConfig c;
  c.name = "stiff-quadratic";
  c.kind = ProblemKind::kQuadraticMin;
  c.dimension = 81;
  c.constants.spectrum_min = 1e-4;
  c.constants.spectrum_max = 1e4;
  c.constants.minimizer = 0.02;
  c.iterations = iterations;
  return c;
}

Outcome AccelerationInSmoothPart() {
  ExperimentConfig c = StiffQuadratic(1000);
  c.baselines = {SolverKind::kMirrorProx};
  c.slope_window = SlopeWindow{100, 1000};
  const RunReport report = RunExperiment(c);
  double amp_slope = NAN;
  double mp_slope = NAN;
  for (const SlopeRecord& s : report.slopes) {
    if (s.run_id == "amp") amp_slope = s.slope;
    if (s.run_id == "mirror-prox") mp_slope = s.slope;
  }

  ExperimentConfig long_run = StiffQuadratic(20000);
  long_run.targets = {1e-3};
  const ComparisonTable table =
      CompareMatrix({long_run}, {SolverKind::kAmp, SolverKind::kMirrorProx});
  const int amp_iters = table.targets.at(0).iterations;
  const int mp_iters = table.targets.at(1).iterations;

  const ResolvedExperiment r = ResolveExperiment(c);
  Outcome o;
  o.pass = r.problem.lipschitz_g == 1e4 && r.problem.lipschitz_h == 0.0 &&
           std::abs(amp_slope + 2.0) <= 0.2 && std::abs(mp_slope + 1.0) <= 0.2 &&
           amp_iters > 0 && mp_iters >= 10 * amp_iters;
  o.detail = Format("slopes AMP %.3f, mirror-prox %.3f; iterations to 1e-3: AMP %.0f, MP %.0f",
                    amp_slope, mp_slope, amp_iters, mp_iters);
  return o;
}

InstanceConstants BallGame() {
  InstanceConstants c;
  c.domain = BilinearDomain::kBall;
  c.matrix = BilinearMatrix::kLogSpectrum;
  return c;
}

Outcome OperatorDominatedRate() {
  const ProblemSpec p = MakeInstance(ProblemKind::kBilinearSaddle, 20, BallGame(), 1);
  const GeometrySetup g = GeometrySetup::Euclidean();
  const Trajectory traj = RunTracked(p, g, DetBounded(p, g), 500);
  std::vector<int> ts;
  std::vector<double> gaps;
  for (int t = 50; t <= 500; ++t) {
    ts.push_back(t);
    gaps.push_back(GapBounded(p, traj.states[t].w_ag).value);
  }
  const SlopeFit fit = FitLogLogSlope(ts, gaps);
  Outcome o;
  o.pass = p.lipschitz_g == 0.0 && std::abs(fit.slope + 1.0) <= 0.15;
  o.detail = Format("slope %.3f over [50, 500]", fit.slope);
  return o;
}

Outcome DeterministicCertificates() {
  const ProblemSpec p = MakeInstance(ProblemKind::kSkewPlusGradient, 8, {}, 1);
  const GeometrySetup g = GeometrySetup::Euclidean();
  Outcome o;
  for (int n : {20, 50, 200}) {
    ScheduleConstants k;
    k.lipschitz_g = p.lipschitz_g;
    k.lipschitz_h = p.lipschitz_h;
    k.horizon = n;
    const Schedule s = Schedule::Make(Regime::kDetUnbounded, k);
    const Trajectory traj = RunTracked(p, g, s, n - 1);
    const double d = (traj.initial().r - *p.known_solution).norm();
    const Certificate cert = CertificateDet(traj, s, d);
    const double lg = p.lipschitz_g;
    const double lh = p.lipschitz_h;
    const double v_bound = (12 * lg / (n * (n - 1.0)) + 12 * lh / (n - 1.0)) * d;
    const double eps_bound = (45 * lg / (n * (n - 1.0)) + 45 * lh / (n - 1.0)) * d * d;
    const auto probes = BuildProbeSet(p, traj, traj.output(), 200, 2.0, n);
    const double probe = GapModified(p, traj.output(), cert.v, probes);
    const bool ok = cert.v_norm() <= v_bound && cert.eps <= eps_bound && probe <= cert.eps;
    o.pass = o.pass && ok;
    o.detail += Format("N=%.0f |v| %.3g/%.3g eps %.3g/", n, cert.v_norm(), v_bound, cert.eps) +
                Format("%.3g probe %.3g; ", eps_bound, probe);
  }
  o.detail.resize(o.detail.size() - 2);
  return o;
}

ExperimentConfig NoisyBallGame(int iterations, int reps) {
  ExperimentConfig c;
  c.name = "noisy-ball-game";
  c.kind = ProblemKind::kBilinearSaddle;
  c.dimension = 20;
  c.constants = BallGame();
  c.regime = Regime::kStochBounded;
  c.sigma_g = 0.5;
  c.sigma_h = 0.5;
  c.iterations = iterations;
  c.replications = reps;
  c.base_seed = 1000;
  c.jobs = 4;
  return c;
}

// One-sided normal tail for the event that the true mean is at most the bound
// while the sample mean exceeds it.
double ExceedanceProbability(double mean, double bound, double std_error) {
  if (std_error <= 0.0) return mean > bound ? 0.0 : 1.0;
  return 0.5 * std::erfc((mean - bound) / (std_error * std::sqrt(2.0)));
}

Outcome StochasticExpectation() {
  ExperimentConfig c = NoisyBallGame(1000, 100);
  c.checkpoints = {100, 200, 300, 500, 700, 1000};
  c.slope_window = SlopeWindow{100, 1000};
  const RunReport report = RunExperiment(c);

  // Per-checkpoint standard errors from the raw rows.
  auto std_error = [&](int t) {
    std::vector<double> v;
    for (const RunRow& r : report.rows) {
      if (r.t == t) v.push_back(r.gap_or_eps);
    }
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= v.size();
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / (v.size() - 1.0) / v.size());
  };

  Outcome o;
  int exceed = 0;
  for (const AggregateRow& a : report.aggregates) {
    if (a.t != 100 && a.t != 500 && a.t != 1000) continue;
    o.detail += Format("t=%.0f mean %.4g C0 %.4g; ", a.t, a.mean, a.bound_printed);
    if (a.mean > a.bound_printed) {
      ++exceed;
      o.detail += Format("exceeds, P %.3g; ",
                         ExceedanceProbability(a.mean, a.bound_printed, std_error(a.t)));
    }
  }
  const double slope = report.slopes.empty() ? NAN : report.slopes[0].slope;
  o.detail += Format("slope %.3f", slope);
  o.pass = report.failures.empty() && exceed <= 1 && std::abs(slope + 0.5) <= 0.15;
  return o;
}

Outcome TailBound() {
  ExperimentConfig c = NoisyBallGame(500, 200);
  c.checkpoints = {500};
  c.tail_lambda = 4.0;
  const RunReport report = RunExperiment(c);
  const AggregateRow& a = report.aggregates.at(0);
  const double limit = 2.0 * std::exp(-16.0 / 3.0) + 3.0 * std::exp(-4.0);
  Outcome o;
  o.pass = report.failures.empty() && a.replications == 200 && a.tail_frequency <= limit;
  o.detail = Format("frequency %.4f above C0+4C1 = %.4g (limit %.4f)", a.tail_frequency,
                    a.tail_threshold, limit);
  return o;
}

Outcome StochasticCertificates() {
  const int n = 100;
  ExperimentConfig c;
  c.name = "noisy-skew";
  c.kind = ProblemKind::kSkewPlusGradient;
  c.dimension = 8;
  c.regime = Regime::kStochUnbounded;
  c.horizon = n;
  c.sigma_g = 0.5;
  c.sigma_h = 0.5;
  c.iterations = n - 1;
  c.replications = 100;
  c.checkpoints = {n - 1};
  c.jobs = 4;
  const ResolvedExperiment r = ResolveExperiment(c);
  const RunReport report = RunExperiment(c);

  double v_mean = 0.0;
  double eps_mean = 0.0;
  int count = 0;
  for (const RunRow& row : report.rows) {
    if (row.t != n - 1) continue;
    v_mean += row.v_norm;
    eps_mean += row.gap_or_eps;
    ++count;
  }
  v_mean /= count;
  eps_mean /= count;

  const double d = *r.distance;
  const double dt = d;
  const double lg = r.problem.lipschitz_g;
  const double lh = r.problem.lipschitz_h;
  const double sigma = std::hypot(c.sigma_g, c.sigma_h);
  const double root = std::sqrt(n - 1.0);
  const double v_bound =
      40 * lg * d / (n * (n - 1.0)) + 24 * lh * d / (n - 1.0) + sigma * (8 * d / dt + 5) / root;
  const double eps_bound = 90 * lg * d * d / (n * (n - 1.0)) + 54 * lh * d * d / (n - 1.0) +
                           sigma * d / root * (18 * d / dt + (19 + 18.0 / n) * dt / d);
  Outcome o;
  o.pass = report.failures.empty() && count == 100 && v_mean <= v_bound && eps_mean <= eps_bound;
  o.detail = Format("mean |v| %.4g <= %.4g, mean eps %.4g <= %.4g", v_mean, v_bound, eps_mean,
                    eps_bound);
  return o;
}

Outcome Reductions() {
  const GeometrySetup euc = GeometrySetup::Euclidean();
  Outcome o;

  // (a) alpha = 1 with G = 0, J = 0 against two projected steps per iteration.
  InstanceConstants b;
  b.matrix = BilinearMatrix::kGaussian;
  const ProblemSpec game = MakeInstance(ProblemKind::kBilinearSaddle, 6, b, 11);
  const double gamma = 0.9 / game.lipschitz_h;
  const Schedule unit = Schedule::Custom([](int) { return 1.0; }, [=](int) { return gamma; });
  const Trajectory traj = RunTracked(game, euc, unit, 200);
  const bool no_smooth = game.GradG(game.set.Center()).norm() == 0.0 && game.simple.is_zero();
  Vector r = traj.initial().r;
  double eg_err = 0.0;
  for (int t = 1; t <= 200; ++t) {
    const Vector w = game.set.Project(r - gamma * game.H(r));
    r = game.set.Project(r - gamma * game.H(w));
    eg_err = std::max(eg_err, (traj.states[t].w - w).cwiseAbs().maxCoeff());
    eg_err = std::max(eg_err, (traj.states[t].r - r).cwiseAbs().maxCoeff());
  }
  const bool a_ok = no_smooth && eg_err <= 1e-12;

  // (b) H = 0: the two prox points coincide.
  InstanceConstants q;
  q.spectrum_min = 0.5;
  q.spectrum_max = 20.0;
  q.l1_weight = 0.1;
  const ProblemSpec quad = MakeInstance(ProblemKind::kQuadraticMin, 5, q, 0);
  const Trajectory qt = RunTracked(quad, euc, DetBounded(quad, euc), 200,
                                   Vector::Constant(5, 0.9));
  bool b_ok = true;
  for (size_t k = 1; k < qt.states.size(); ++k) b_ok = b_ok && qt.states[k].w == qt.states[k].r;

  // (c) zero noise replays the deterministic run bit for bit.
  const ProblemSpec ball = MakeInstance(ProblemKind::kBilinearSaddle, 8, BallGame(), 2);
  const Schedule s = DetBounded(ball, euc);
  const Trajectory det = RunTracked(ball, euc, s, 200);
  StochasticOracle oracle(ball, NoiseKind::kGaussian, 0.0, 0.0, 99);
  const Trajectory sto = RunTracked(oracle, euc, s, 200);
  bool c_ok = det.states.size() == sto.states.size();
  for (size_t k = 0; c_ok && k < det.states.size(); ++k) {
    c_ok = det.states[k].w == sto.states[k].w && det.states[k].r == sto.states[k].r &&
           det.states[k].w_ag == sto.states[k].w_ag && det.states[k].w_md == sto.states[k].w_md;
  }

  o.pass = a_ok && b_ok && c_ok;
  o.detail = Format("(a) max deviation %.3g", eg_err) +
             (b_ok ? "; (b) w = r" : "; (b) w != r") +
             (c_ok ? "; (c) bitwise equal" : "; (c) differs");
  return o;
}

struct ProxCell {
  const char* name;
  GeometrySetup setup;
  FeasibleSet set;
  SimpleTerm j;
};

double WorstProxResidual(std::mt19937_64& rng) {
  const GeometrySetup euc = GeometrySetup::Euclidean();
  const GeometrySetup ent = GeometrySetup::Entropy();
  const int n = 6;
  const std::vector<ProxCell> cells = {
      {"box", euc, FeasibleSet::Box(n, -1.0, 2.0), SimpleTerm::Zero()},
      {"box-l1", euc, FeasibleSet::Box(n, -1.0, 2.0), SimpleTerm::L1(0.7)},
      {"free", euc, FeasibleSet::Free(n), SimpleTerm::Zero()},
      {"free-l1", euc, FeasibleSet::Free(n), SimpleTerm::L1(0.7)},
      {"ball", euc, FeasibleSet::Ball(Vector::Constant(n, 0.3), 1.5), SimpleTerm::Zero()},
      {"ball-l1", euc, FeasibleSet::Ball(Vector::Zero(n), 1.5), SimpleTerm::L1(0.4)},
      {"simplex", euc, FeasibleSet::Simplex(n), SimpleTerm::Zero()},
      {"entropy-simplex", ent, FeasibleSet::Simplex(n), SimpleTerm::Zero()},
      {"entropy-padded-simplex", ent, FeasibleSet::Simplex(n, 1e-3), SimpleTerm::Zero()},
  };
  std::normal_distribution<double> normal(0.0, 2.0);
  std::uniform_real_distribution<double> step(0.05, 3.0);
  double worst = -INFINITY;
  for (const ProxCell& cell : cells) {
    for (int k = 0; k < 100; ++k) {
      Vector z = cell.set.Sample(rng);
      if (!cell.setup.is_euclidean()) z = 0.9 * z + 0.1 * cell.set.Center();
      Vector eta(n);
      for (int i = 0; i < n; ++i) eta(i) = normal(rng);
      const double gamma = step(rng);
      const Vector w = ProxMap(cell.setup, cell.set, z, eta, cell.j, gamma);
      for (int m = 0; m < 5; ++m) {
        const Vector u = cell.set.Sample(rng);
        worst = std::max(worst,
                         ProxOptimalityResidual(cell.setup, cell.set, z, eta, cell.j, gamma, w, u));
      }
    }
  }
  return worst;
}

// Returns the number of draws for which some published schedule violates its
// regime condition, and the worst Gamma identity error seen along the way.
int RegimeViolations(std::mt19937_64& rng, double* gamma_identity_error) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) {
    return std::exp(std::log(lo) + unit(rng) * (std::log(hi) - std::log(lo)));
  };
  const double tol = 1e-12;
  int violations = 0;
  for (int draw = 0; draw < 1000; ++draw) {
    ScheduleConstants k;
    k.lipschitz_g = unit(rng) < 0.2 ? 0.0 : log_uniform(1e-2, 1e4);
    k.lipschitz_h = unit(rng) < 0.2 && k.lipschitz_g > 0 ? 0.0 : log_uniform(1e-2, 1e3);
    k.sigma_g = log_uniform(1e-3, 5.0);
    k.sigma_h = log_uniform(1e-3, 5.0);
    k.omega = log_uniform(0.1, 10.0);
    k.horizon = 2 + static_cast<int>(unit(rng) * 400);
    k.distance_guess = log_uniform(0.1, 10.0);
    const double mu_bounded = log_uniform(0.1, 2.0);
    const int steps = 300;
    bool ok = true;
    try {
      for (Regime regime : {Regime::kDetBounded, Regime::kDetUnbounded, Regime::kStochBounded,
                            Regime::kStochUnbounded}) {
        ScheduleConstants kr = k;
        kr.mu = IsUnbounded(regime) ? 1.0 : mu_bounded;
        if (!IsStochastic(regime)) kr.sigma_g = kr.sigma_h = 0.0;
        const Schedule s = Schedule::Make(regime, kr);
        const double mu = kr.mu;
        const double lg = kr.lipschitz_g;
        const double lh = kr.lipschitz_h;
        const int last = IsUnbounded(regime) ? kr.horizon : steps;
        double prev_ratio = 0.0;
        double big = 1.0;
        double weight_sum = 0.0;
        for (int t = 1; t <= last; ++t) {
          const double a = s.alpha(t);
          const double g = s.gamma(t);
          const double ratio = a / (s.big_gamma(t) * g);
          switch (regime) {
            case Regime::kDetBounded:
              ok = ok && mu - lg * a * g - lh * lh * g * g / mu >= -tol * mu;
              ok = ok && ratio >= prev_ratio * (1 - tol);
              break;
            case Regime::kDetUnbounded:
              ok = ok && lg * a * g + lh * lh * g * g <= 2.0 / 3.0 + tol;
              ok = ok && (t == 1 || std::abs(ratio - prev_ratio) <= tol * ratio);
              break;
            case Regime::kStochBounded:
              ok = ok && 5.0 / 6.0 * mu - lg * a * g - 3 * lh * lh * g * g / mu >= -tol * mu;
              break;
            case Regime::kStochUnbounded:
              ok = ok && lg * a * g + 3 * lh * lh * g * g <= 5.0 / 12.0 + tol;
              break;
            case Regime::kCustom:
              break;
          }
          prev_ratio = ratio;
          if (t > 1) big *= 1.0 - a;
          weight_sum += a / s.big_gamma(t);
          *gamma_identity_error = std::max(
              {*gamma_identity_error, std::abs(s.big_gamma(t) * weight_sum - 1.0),
               std::abs(s.big_gamma(t) - big) / big});
        }
      }
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) ++violations;
  }
  return violations;
}

Outcome PropertySuites() {
  std::mt19937_64 rng(20260);
  const double residual = WorstProxResidual(rng);

  // Gamma identity for the published step t -> 2 / (t + 1) up to t = 1000.
  const Schedule published = Schedule::Make(Regime::kDetBounded, [] {
    ScheduleConstants k;
    k.lipschitz_g = 1.0;
    k.lipschitz_h = 1.0;
    k.omega = 1.0;
    return k;
  }());
  double gamma_error = 0.0;
  double sum = 0.0;
  for (int t = 1; t <= 1000; ++t) {
    sum += published.alpha(t) / published.big_gamma(t);
    gamma_error = std::max(gamma_error, std::abs(published.big_gamma(t) * sum - 1.0));
  }
  const int violations = RegimeViolations(rng, &gamma_error);

  // A few more trajectories for the aggregation identity, including entropy
  // geometry and noisy runs.
  InstanceConstants ent;
  ent.geometry = GeometrySetup::Entropy();
  const ProblemSpec game = MakeInstance(ProblemKind::kBilinearSaddle, 5, ent, 4);
  RunTracked(game, ent.geometry, DetBounded(game, ent.geometry), 1000);
  const ProblemSpec ball = MakeInstance(ProblemKind::kBilinearSaddle, 6, BallGame(), 5);
  ScheduleConstants k;
  k.lipschitz_g = ball.lipschitz_g;
  k.lipschitz_h = ball.lipschitz_h;
  k.sigma_g = 0.5;
  k.sigma_h = 0.5;
  k.omega = std::sqrt(OmegaSquared(GeometrySetup::Euclidean(), ball.set));
  StochasticOracle oracle(ball, NoiseKind::kGaussian, 0.5, 0.5, 17);
  RunTracked(oracle, GeometrySetup::Euclidean(), Schedule::Make(Regime::kStochBounded, k), 1000);

  Outcome o;
  o.pass = residual <= 1e-9 && gamma_error <= 1e-10 && violations == 0 &&
           g_aggregation_error <= 1e-10;
  o.detail = Format("prox residual %.3g; Gamma identity %.3g; regime violations %.0f/1000; ",
                    residual, gamma_error, violations) +
             Format("aggregation %.3g over %.0f trajectories", g_aggregation_error,
                    g_aggregation_trajectories);
  return o;
}

struct Criterion {
  int id;
  double time_limit;  // seconds
  std::function<Outcome()> check;
};

}  // namespace
}  // namespace ampvi

int main() {
  using ampvi::Criterion;
  using ampvi::Outcome;
  const std::vector<Criterion> criteria = {
      {1, 10, ampvi::PerIterationBound},        {2, 30, ampvi::AccelerationInSmoothPart},
      {3, 10, ampvi::OperatorDominatedRate},    {4, 10, ampvi::DeterministicCertificates},
      {5, 120, ampvi::StochasticExpectation},   {6, 180, ampvi::TailBound},
      {7, 120, ampvi::StochasticCertificates},  {8, 1, ampvi::Reductions},
      {9, 10, ampvi::PropertySuites},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < c.time_limit;
    if (!pass) ++failed;
    std::printf("AC%d %s  %.2fs (limit %.0fs)  %s\n", c.id, pass ? "PASS" : "FAIL", secs,
                c.time_limit, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
