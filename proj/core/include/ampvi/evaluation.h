// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef AMPVI_EVALUATION_H_
#define AMPVI_EVALUATION_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "ampvi/problems.h"
#include "ampvi/schedules.h"
#include "ampvi/solvers.h"
#include "ampvi/types.h"

namespace ampvi {

struct GapValue {
  double value = 0.0;
  // False when the value came from the multi-start search and is only a
  // lower bound on the true gap.
  bool exact = true;
};

struct GapSearchOptions {
  int random_starts = 8;
  int ascent_steps = 200;
  uint64_t seed = 7;
};

// g(u_tilde) = sup_{u in set} Q(u_tilde, u).
//
// Exact when Q(u_tilde, .) is linear in u (affine G, skew-linear or zero H,
// J = 0; this covers every bilinear instance), or when H = 0 and G is a
// diagonal quadratic on a box (separable). Other bounded problems fall back
// to projected finite-difference ascent, which returns a lower bound.
// Throws DomainError on unbounded sets.
GapValue GapBounded(const ProblemSpec& problem, const Vector& u_tilde,
                    const GapSearchOptions& options = {});

// Perturbation certificate (v, eps) for the output after `iterations`
// steps: Q(w_ag, u) - <v, w_ag - u> <= eps for every u in the set.
struct Certificate {
  Regime regime = Regime::kCustom;
  int iterations = 0;
  Vector v;
  double eps = 0.0;
  // Stochastic certificates use the true oracle noise, which only a
  // simulator can observe.
  bool simulation_side = false;
  std::optional<TheoreticalBound> bound;

  double v_norm() const { return v.norm(); }
};

// Builds certificates online from consecutive iterate pairs, so long runs
// need not keep their history. Requires euclidean geometry and an unbounded
// regime schedule.
class CertificateTracker {
 public:
  CertificateTracker(const Schedule& schedule, const GeometrySetup& geometry,
                     const Vector& r1, bool stochastic);

  // `noise` is required for stochastic trackers.
  void Update(const IterateState& before, const IterateState& after,
              const NoiseLogEntry* noise);

  int iterations() const { return iterations_; }
  // Certificate for the most recent `after` state. Attaches the theorem
  // bound when `distance` (|r_1 - u*|) is given.
  Certificate Current(std::optional<double> distance = std::nullopt) const;

 private:
  Schedule schedule_;
  Vector r1_;
  bool stochastic_;
  int iterations_ = 0;
  double gap_sum_ = 0.0;  // sum_i |r_i - w_{i+1}|^2
  double noise_sum_ = 0.0;  // U_t
  Vector r_last_;
  Vector w_ag_last_;
  Vector w_v_last_;
};

// Deterministic certificate:
//   v   = (alpha_t / gamma_t) (r_1 - r_{t+1})
//   eps = alpha_t / (2 gamma_t) (|r_1 - w_ag|^2 - |r_{t+1} - w_ag|^2
//                                - (1 - c^2) sum_i |r_i - w_{i+1}|^2)
// Needs a full-history trajectory with euclidean geometry.
Certificate CertificateDet(const Trajectory& trajectory, const Schedule& schedule,
                           std::optional<double> distance = std::nullopt);

// Stochastic certificate, built from w_v and the recorded noise:
//   v   = (alpha_t / gamma_t) (2 r_1 - r_{t+1} - w_v)
//   eps = alpha_t / (2 gamma_t) (2|r_1 - w_ag|^2 - |r_{t+1} - w_ag|^2
//         - |w_v - w_ag|^2 - (q - c^2) sum_i |r_i - w_{i+1}|^2) + Gamma_t U_t
// Throws InputError when the noise log is missing.
Certificate CertificateStoch(const Trajectory& trajectory, const Schedule& schedule,
                             std::optional<double> distance = std::nullopt);

// max over probes of Q(u_tilde, u) - <v, u_tilde - u>: a lower bound on the
// modified gap. Throws InputError for an empty probe set.
double GapModified(const ProblemSpec& problem, const Vector& u_tilde, const Vector& v,
                   const std::vector<Vector>& probes);

// Probe points for GapModified: u_tilde, the known solution, every stored
// iterate, and `random_count` Gaussian points around the known solution (or
// u_tilde) with standard deviation `spread` per coordinate.
std::vector<Vector> BuildProbeSet(const ProblemSpec& problem, const Trajectory& trajectory,
                                  const Vector& u_tilde, int random_count, double spread,
                                  uint64_t seed);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  int points = 0;
  int t_begin = 0;
  int t_end = 0;
};

struct SlopeWindow {
  int t_begin;
  int t_end;
};

// Least squares of log(value) on log(t). Values below 1e-12 are skipped.
// Default window is the trailing half [t_max / 2, t_max]. Throws
// StatisticsError with fewer than two usable points.
SlopeFit FitLogLogSlope(const std::vector<int>& t, const std::vector<double>& values,
                        std::optional<SlopeWindow> window = std::nullopt);

// Linear interpolation between order statistics.
double Quantile(std::vector<double> values, double p);

enum class ReportMode { kTheorem, kPrinted };

struct GapRecord {
  int t = 0;          // iterations completed; the measured point is w_ag_{t+1}
  double measured = 0.0;  // gap (bounded) or eps (unbounded)
  double v_norm = 0.0;    // unbounded regimes only
  double bound = 0.0;
  double ratio = 0.0;
  bool exact = true;
};

struct GapReport {
  Regime regime = Regime::kCustom;
  std::vector<GapRecord> records;
  std::optional<SlopeFit> slope;
  double max_ratio = 0.0;

  bool AllWithin(double slack = 1e-8) const { return max_ratio <= 1.0 + slack; }
};

// Per-iteration check of a deterministic trajectory with full history.
// Bounded regimes compare the gap of w_ag against the gap bound; the
// det-unbounded regime compares the certificate residual against the eps
// bound, which needs a known solution. Slope is fitted over `window`.
GapReport VerifyBounds(const Trajectory& trajectory, const ProblemSpec& problem,
                       ReportMode mode = ReportMode::kTheorem,
                       std::optional<SlopeWindow> window = std::nullopt);

// Gaps of many stochastic replications at common checkpoints.
struct ReplicatedGaps {
  std::vector<int> checkpoints;
  std::vector<std::vector<double>> gaps;  // gaps[replication][checkpoint]
};

struct ExpectationRecord {
  int t = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double q05 = 0.0;
  double q95 = 0.0;
  double q0 = 0.0;  // theorem bound on the mean
  double c0 = 0.0;  // printed bound on the mean, NaN at t = 1
  double tail_threshold = 0.0;  // C0 + lambda C1 (Q0 + lambda Q1 at t = 1)
  double tail_frequency = 0.0;
};

struct ExpectationReport {
  std::vector<ExpectationRecord> records;
  std::optional<SlopeFit> mean_slope;
  double lambda = 4.0;
  double tail_bound = 0.0;
};

// Sample-mean gap against Q0/C0 and the tail frequency at `lambda` for a
// stoch-bounded schedule. Throws StatisticsError with fewer than 30
// replications.
ExpectationReport VerifyExpectation(const ReplicatedGaps& data, const Schedule& schedule,
                                    double omega_sq, double lambda = 4.0,
                                    std::optional<SlopeWindow> window = std::nullopt);

}  // namespace ampvi

#endif  // AMPVI_EVALUATION_H_
