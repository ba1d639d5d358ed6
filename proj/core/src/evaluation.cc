// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ampvi/evaluation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "ampvi/errors.h"

namespace ampvi {
namespace {

constexpr double kNoiseFloor = 1e-12;

bool AllBoxes(const FeasibleSet& set) {
  for (int k = 0; k < set.num_blocks(); ++k) {
    if (!std::holds_alternative<BoxBlock>(set.block(k))) return false;
  }
  return true;
}

bool IsZeroOperator(const MonotoneOperator& op) {
  return dynamic_cast<const ZeroOperator*>(&op) != nullptr;
}

// min over [lo, hi] of 0.5 p (x - c)^2 + b x + lambda |x|.
double MinimizeCoordinate(double p, double c, double b, double lambda, double lo,
                          double hi) {
  auto f = [&](double x) {
    return 0.5 * p * (x - c) * (x - c) + b * x + lambda * std::abs(x);
  };
  if (p > 0.0) {
    const double m = c - b / p;
    const double shrink = lambda / p;
    const double x = std::copysign(std::max(std::abs(m) - shrink, 0.0), m);
    return f(std::clamp(x, lo, hi));
  }
  return std::min({f(lo), f(hi), f(std::clamp(0.0, lo, hi))});
}

// Q(u_tilde, .) is linear: G affine, H(u) = M u with M skew (or zero), J = 0.
std::optional<double> LinearGap(const ProblemSpec& p, const Vector& u_tilde) {
  if (!p.smooth->is_affine() || !p.simple.is_zero()) return std::nullopt;
  Vector c = -p.smooth->linear();
  if (const Matrix* m = p.monotone->skew_matrix()) {
    c -= *m * u_tilde;
  } else if (!IsZeroOperator(*p.monotone)) {
    return std::nullopt;
  }
  return p.smooth->linear().dot(u_tilde) + p.set.Support(c);
}

// H = 0, diagonal quadratic G on a box: g = (G + J)(u_tilde) - min (G + J).
std::optional<double> SeparableGap(const ProblemSpec& p, const Vector& u_tilde) {
  if (!IsZeroOperator(*p.monotone) || !p.smooth->is_diagonal() || !AllBoxes(p.set)) {
    return std::nullopt;
  }
  const Vector diag = p.smooth->hessian().diagonal();
  const Vector& center = p.smooth->center();
  const Vector& linear = p.smooth->linear();
  const double lambda = p.simple.is_zero() ? 0.0 : p.simple.weight();
  double minimum = 0.0;
  for (int k = 0; k < p.set.num_blocks(); ++k) {
    const auto& box = std::get<BoxBlock>(p.set.block(k));
    const int off = p.set.block_offset(k);
    for (int i = 0; i < p.set.block_dim(k); ++i) {
      const int j = off + i;
      minimum += MinimizeCoordinate(diag[j], center[j], linear[j], lambda, box.lower[i],
                                    box.upper[i]);
    }
  }
  double value = 0.0;
  for (Eigen::Index j = 0; j < u_tilde.size(); ++j) {
    const double x = u_tilde[j];
    value += 0.5 * diag[j] * (x - center[j]) * (x - center[j]) + linear[j] * x +
             lambda * std::abs(x);
  }
  return std::max(value - minimum, 0.0);
}

double SearchGap(const ProblemSpec& p, const Vector& u_tilde,
                 const GapSearchOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<Vector> starts = {u_tilde, p.set.Center()};
  if (p.known_solution) starts.push_back(*p.known_solution);
  for (int k = 0; k < options.random_starts; ++k) starts.push_back(p.set.Sample(rng));

  auto objective = [&](const Vector& u) { return EvalQ(p, u_tilde, u); };
  double best = 0.0;
  const int d = p.dimension();
  for (Vector u : starts) {
    double value = objective(u);
    double step = 1.0;
    for (int it = 0; it < options.ascent_steps; ++it) {
      Vector grad(d);
      const double h = 1e-6 * std::max(1.0, u.lpNorm<Eigen::Infinity>());
      for (int i = 0; i < d; ++i) {
        Vector plus = u;
        Vector minus = u;
        plus[i] += h;
        minus[i] -= h;
        grad[i] = (objective(plus) - objective(minus)) / (2.0 * h);
      }
      bool improved = false;
      while (step > 1e-12) {
        const Vector trial = p.set.Project(u + step * grad);
        const double trial_value = objective(trial);
        if (trial_value > value) {
          u = trial;
          value = trial_value;
          step *= 2.0;
          improved = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved) break;
    }
    best = std::max(best, value);
  }
  return best;
}

void RequireCertificateSetup(const Trajectory& traj, const Schedule& schedule) {
  if (!traj.geometry.is_euclidean()) {
    throw ConfigError("certificates require the euclidean geometry");
  }
  if (!IsUnbounded(schedule.regime())) {
    throw ConfigError("certificates need an unbounded-regime schedule");
  }
  if (traj.states.size() != static_cast<size_t>(traj.iterations) + 1) {
    throw InputError("certificates need a full-history trajectory");
  }
}

}  // namespace

GapValue GapBounded(const ProblemSpec& problem, const Vector& u_tilde,
                    const GapSearchOptions& options) {
  if (!problem.set.IsBounded()) {
    throw DomainError("gap is infinite on an unbounded set; use GapModified");
  }
  if (u_tilde.size() != problem.dimension()) throw InputError("point has the wrong size");
  if (auto v = LinearGap(problem, u_tilde)) return {*v, true};
  if (auto v = SeparableGap(problem, u_tilde)) return {*v, true};
  return {SearchGap(problem, u_tilde, options), false};
}

CertificateTracker::CertificateTracker(const Schedule& schedule,
                                       const GeometrySetup& geometry, const Vector& r1,
                                       bool stochastic)
    : schedule_(schedule),
      r1_(r1),
      stochastic_(stochastic),
      r_last_(r1),
      w_ag_last_(r1),
      w_v_last_(r1) {
  if (!geometry.is_euclidean()) {
    throw ConfigError("certificates require the euclidean geometry");
  }
  if (!IsUnbounded(schedule.regime())) {
    throw ConfigError("certificates need an unbounded-regime schedule");
  }
}

void CertificateTracker::Update(const IterateState& before, const IterateState& after,
                                const NoiseLogEntry* noise) {
  const int i = before.t;
  gap_sum_ += (before.r - after.w).squaredNorm();
  if (stochastic_) {
    if (noise == nullptr || !before.w_v || !after.w_v) {
      throw InputError("stochastic certificates need the noise log and w_v");
    }
    const double mu = schedule_.constants().mu;
    const double q = schedule_.q();
    const double weight = schedule_.alpha(i) / schedule_.big_gamma(i);
    const double step = weight * schedule_.gamma(i) / mu;
    const Vector& dh_r = noise->delta_h_r;
    const Vector& dh_w = noise->delta_h_w;
    const Vector& dg = noise->delta_g;
    noise_sum_ += 0.5 * step * (dh_w + dg).squaredNorm() +
                  step / (2.0 * (1.0 - q)) * dg.squaredNorm() +
                  1.5 * step * (dh_w.squaredNorm() + dh_r.squaredNorm()) -
                  weight * dg.dot(before.r - *before.w_v) -
                  weight * dh_w.dot(after.w - *before.w_v);
    w_v_last_ = *after.w_v;
  }
  r_last_ = after.r;
  w_ag_last_ = after.w_ag;
  iterations_ = i;
}

Certificate CertificateTracker::Current(std::optional<double> distance) const {
  if (iterations_ < 1) throw InputError("certificate needs at least one iteration");
  const int t = iterations_;
  const double a = schedule_.alpha(t);
  const double g = schedule_.gamma(t);
  const double c2 = schedule_.c_squared();
  Certificate cert;
  cert.regime = schedule_.regime();
  cert.iterations = t;
  const double start_term = (r1_ - w_ag_last_).squaredNorm();
  const double end_term = (r_last_ - w_ag_last_).squaredNorm();
  if (!stochastic_) {
    cert.v = a / g * (r1_ - r_last_);
    cert.eps = a / (2.0 * g) * (start_term - end_term - (1.0 - c2) * gap_sum_);
  } else {
    const double q = schedule_.q();
    cert.v = a / g * (2.0 * r1_ - r_last_ - w_v_last_);
    cert.eps = a / (2.0 * g) *
                   (2.0 * start_term - end_term - (w_v_last_ - w_ag_last_).squaredNorm() -
                    (q - c2) * gap_sum_) +
               schedule_.big_gamma(t) * noise_sum_;
    cert.simulation_side = true;
  }
  if (distance) cert.bound = ComputeBound(schedule_, t, {std::nullopt, *distance});
  return cert;
}

Certificate CertificateDet(const Trajectory& trajectory, const Schedule& schedule,
                           std::optional<double> distance) {
  RequireCertificateSetup(trajectory, schedule);
  CertificateTracker tracker(schedule, trajectory.geometry, trajectory.initial().r, false);
  for (size_t k = 1; k < trajectory.states.size(); ++k) {
    tracker.Update(trajectory.states[k - 1], trajectory.states[k], nullptr);
  }
  return tracker.Current(distance);
}

Certificate CertificateStoch(const Trajectory& trajectory, const Schedule& schedule,
                             std::optional<double> distance) {
  RequireCertificateSetup(trajectory, schedule);
  if (trajectory.noise.size() != static_cast<size_t>(trajectory.iterations)) {
    throw InputError("stochastic certificate needs the full noise log");
  }
  CertificateTracker tracker(schedule, trajectory.geometry, trajectory.initial().r, true);
  for (size_t k = 1; k < trajectory.states.size(); ++k) {
    tracker.Update(trajectory.states[k - 1], trajectory.states[k], &trajectory.noise[k - 1]);
  }
  return tracker.Current(distance);
}

double GapModified(const ProblemSpec& problem, const Vector& u_tilde, const Vector& v,
                   const std::vector<Vector>& probes) {
  if (probes.empty()) throw InputError("modified gap needs at least one probe");
  double best = -std::numeric_limits<double>::infinity();
  for (const Vector& u : probes) {
    best = std::max(best, EvalQ(problem, u_tilde, u) - v.dot(u_tilde - u));
  }
  return best;
}

std::vector<Vector> BuildProbeSet(const ProblemSpec& problem, const Trajectory& trajectory,
                                  const Vector& u_tilde, int random_count, double spread,
                                  uint64_t seed) {
  std::vector<Vector> probes = {u_tilde};
  if (problem.known_solution) probes.push_back(*problem.known_solution);
  for (const IterateState& s : trajectory.states) {
    probes.push_back(s.r);
    probes.push_back(s.w);
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, spread);
  const Vector& anchor = problem.known_solution ? *problem.known_solution : u_tilde;
  for (int k = 0; k < random_count; ++k) {
    Vector u = anchor;
    for (Eigen::Index i = 0; i < u.size(); ++i) u[i] += normal(rng);
    probes.push_back(problem.set.Project(u));
  }
  return probes;
}

SlopeFit FitLogLogSlope(const std::vector<int>& t, const std::vector<double>& values,
                        std::optional<SlopeWindow> window) {
  if (t.size() != values.size()) throw InputError("slope inputs differ in length");
  if (t.empty()) throw StatisticsError("slope fit needs data");
  const int t_max = *std::max_element(t.begin(), t.end());
  const SlopeWindow w = window ? *window : SlopeWindow{t_max / 2, t_max};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (size_t k = 0; k < t.size(); ++k) {
    if (t[k] < w.t_begin || t[k] > w.t_end) continue;
    if (!(values[k] >= kNoiseFloor) || t[k] < 1) continue;
    const double x = std::log(static_cast<double>(t[k]));
    const double y = std::log(values[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double denom = n * sxx - sx * sx;
  if (n < 2 || denom <= 0.0) {
    throw StatisticsError("slope fit needs two distinct usable points in the window");
  }
  SlopeFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.points = n;
  fit.t_begin = w.t_begin;
  fit.t_end = w.t_end;
  return fit;
}

double Quantile(std::vector<double> values, double p) {
  if (values.empty()) throw StatisticsError("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = p * (values.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(pos));
  const size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - lo) * (values[hi] - values[lo]);
}

GapReport VerifyBounds(const Trajectory& trajectory, const ProblemSpec& problem,
                       ReportMode mode, std::optional<SlopeWindow> window) {
  const Schedule& schedule = trajectory.schedule;
  const Regime regime = schedule.regime();
  if (IsStochastic(regime)) {
    throw ConfigError("stochastic runs are checked in expectation; use VerifyExpectation");
  }
  if (regime == Regime::kCustom) throw ConfigError("custom schedules carry no bound");
  if (trajectory.states.size() != static_cast<size_t>(trajectory.iterations) + 1) {
    throw InputError("bound verification needs a full-history trajectory");
  }

  GapReport report;
  report.regime = regime;
  std::vector<int> ts;
  std::vector<double> measured;

  if (regime == Regime::kDetBounded) {
    const double om2 = OmegaSquared(trajectory.geometry, problem.set);
    for (size_t k = 1; k < trajectory.states.size(); ++k) {
      const int t = static_cast<int>(k);
      const GapValue gap = GapBounded(problem, trajectory.states[k].w_ag);
      const TheoreticalBound b = ComputeBound(schedule, t, {om2, std::nullopt});
      GapRecord rec;
      rec.t = t;
      rec.measured = gap.value;
      rec.exact = gap.exact;
      rec.bound = mode == ReportMode::kTheorem ? b.gap_bound : b.gap_bound_printed;
      rec.ratio = rec.measured / rec.bound;
      report.records.push_back(rec);
    }
  } else {
    if (!problem.known_solution) {
      throw ConfigError("det-unbounded bounds need a known solution");
    }
    const double distance = (trajectory.initial().r - *problem.known_solution).norm();
    CertificateTracker tracker(schedule, trajectory.geometry, trajectory.initial().r, false);
    for (size_t k = 1; k < trajectory.states.size(); ++k) {
      tracker.Update(trajectory.states[k - 1], trajectory.states[k], nullptr);
      const Certificate cert = tracker.Current(distance);
      GapRecord rec;
      rec.t = static_cast<int>(k);
      rec.measured = cert.eps;
      rec.v_norm = cert.v_norm();
      rec.bound = mode == ReportMode::kTheorem ? cert.bound->eps_bound
                                               : cert.bound->eps_bound_printed;
      rec.ratio = rec.measured / rec.bound;
      report.records.push_back(rec);
    }
  }

  for (const GapRecord& rec : report.records) {
    report.max_ratio = std::max(report.max_ratio, rec.ratio);
    ts.push_back(rec.t);
    measured.push_back(rec.measured);
  }
  try {
    report.slope = FitLogLogSlope(ts, measured, window);
  } catch (const StatisticsError&) {
    report.slope.reset();
  }
  return report;
}

ExpectationReport VerifyExpectation(const ReplicatedGaps& data, const Schedule& schedule,
                                    double omega_sq, double lambda,
                                    std::optional<SlopeWindow> window) {
  if (schedule.regime() != Regime::kStochBounded) {
    throw ConfigError("expectation checks need a stoch-bounded schedule");
  }
  const size_t reps = data.gaps.size();
  if (reps < 30) {
    throw StatisticsError("expectation checks need at least 30 replications, got " +
                          std::to_string(reps));
  }
  ExpectationReport report;
  report.lambda = lambda;
  report.tail_bound = TailProbabilityBound(lambda);
  std::vector<int> ts;
  std::vector<double> means;
  for (size_t c = 0; c < data.checkpoints.size(); ++c) {
    std::vector<double> sample(reps);
    for (size_t r = 0; r < reps; ++r) {
      if (data.gaps[r].size() != data.checkpoints.size()) {
        throw InputError("replication has the wrong number of checkpoints");
      }
      sample[r] = data.gaps[r][c];
    }
    ExpectationRecord rec;
    rec.t = data.checkpoints[c];
    const double mean = std::accumulate(sample.begin(), sample.end(), 0.0) / reps;
    double var = 0.0;
    for (double x : sample) var += (x - mean) * (x - mean);
    var /= (reps - 1);
    rec.mean = mean;
    rec.std_error = std::sqrt(var / reps);
    rec.q05 = Quantile(sample, 0.05);
    rec.q95 = Quantile(sample, 0.95);
    const TheoreticalBound b = ComputeBound(schedule, rec.t, {omega_sq, std::nullopt});
    rec.q0 = b.q0;
    rec.c0 = b.c0;
    rec.tail_threshold = rec.t >= 2 && std::isfinite(b.c0) ? b.c0 + lambda * b.c1
                                                           : b.q0 + lambda * b.q1;
    const auto exceed = std::count_if(sample.begin(), sample.end(),
                                      [&](double g) { return g > rec.tail_threshold; });
    rec.tail_frequency = static_cast<double>(exceed) / reps;
    report.records.push_back(rec);
    ts.push_back(rec.t);
    means.push_back(mean);
  }
  try {
    report.mean_slope = FitLogLogSlope(ts, means, window);
  } catch (const StatisticsError&) {
    report.mean_slope.reset();
  }
  return report;
}

}  // namespace ampvi
