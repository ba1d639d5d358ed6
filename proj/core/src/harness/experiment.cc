// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ampvi/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <thread>

#include "ampvi/errors.h"
#include "json.hpp"

namespace ampvi {
namespace {

double Finite(double x) { return std::isfinite(x) ? x : 0.0; }

double Ratio(double measured, double bound) {
  return (std::isfinite(bound) && bound > 0.0) ? measured / bound : 0.0;
}

struct ReplicationResult {
  std::vector<RunRow> rows;
  OracleCounters counters;
  std::optional<std::string> error;
};

// Everything a single solver run shares across replications.
struct RunPlan {
  std::string run_id;
  SolverKind solver = SolverKind::kAmp;
  const ResolvedExperiment* resolved = nullptr;
  const ExperimentConfig* config = nullptr;
  GeometrySetup geometry;  // geometry the solver runs in
  Schedule schedule;       // AMP schedule, or the fixed baseline step
  double baseline_gamma = 0.0;
  std::vector<char> is_checkpoint;  // indexed by iterations completed
  std::map<int, TheoreticalBound> bounds;  // AMP regimes with a bound
};

double BaselineGamma(const ExperimentConfig& c, const ResolvedExperiment& r) {
  if (c.baseline_gamma > 0.0) return c.baseline_gamma;
  const double lf = r.problem.lipschitz_g + r.problem.lipschitz_h;
  if (!(lf > 0.0)) throw ConfigError("baseline step needs L_G + L_H > 0 or baseline_gamma");
  return r.geometry.mu / lf;
}

RunPlan MakePlan(SolverKind solver, const ExperimentConfig& c, const ResolvedExperiment& r) {
  RunPlan plan;
  plan.run_id = SolverKindName(solver);
  plan.solver = solver;
  plan.resolved = &r;
  plan.config = &c;
  plan.geometry = r.geometry;
  plan.schedule = r.schedule;
  plan.is_checkpoint.assign(c.iterations + 1, 0);
  for (int t : r.checkpoints) plan.is_checkpoint[t] = 1;
  if (solver == SolverKind::kAmp) {
    if (r.schedule.regime() != Regime::kCustom) {
      BoundExtras extras{r.omega_sq, r.distance};
      for (int t : r.checkpoints) plan.bounds.emplace(t, ComputeBound(r.schedule, t, extras));
    }
    return plan;
  }
  if (solver == SolverKind::kExtragradient) {
    if (!r.geometry.is_euclidean() && c.baseline_gamma <= 0.0) {
      throw ConfigError("extragradient on a non-euclidean instance needs baseline_gamma");
    }
    plan.geometry = GeometrySetup::Euclidean();
  }
  plan.baseline_gamma = BaselineGamma(c, r);
  const double g = plan.baseline_gamma;
  plan.schedule = Schedule::Custom([](int) { return 1.0; }, [g](int) { return g; });
  return plan;
}

RunRow MakeRow(const RunPlan& plan, int replication, int t) {
  RunRow row;
  row.run_id = plan.run_id;
  row.replication = replication;
  row.t = t;
  row.alpha = plan.schedule.alpha(t);
  row.gamma = plan.schedule.gamma(t);
  return row;
}

ReplicationResult RunReplication(const RunPlan& plan, int replication) {
  const ResolvedExperiment& r = *plan.resolved;
  const ExperimentConfig& c = *plan.config;
  ReplicationResult out;
  try {
    RunOptions options;
    options.iterations = c.iterations;
    options.start = r.start;
    options.history = HistoryMode::kFinalOnly;
    options.keep_noise_log = false;

    const bool unbounded = plan.solver == SolverKind::kAmp && IsUnbounded(r.schedule.regime());
    std::optional<CertificateTracker> tracker;
    if (unbounded) tracker.emplace(r.schedule, r.geometry, r.start, c.stochastic());

    options.observer = [&](const IterateState& before, const IterateState& after,
                           const NoiseLogEntry* noise) {
      const int t = before.t;
      if (tracker) tracker->Update(before, after, noise);
      if (!plan.is_checkpoint[t]) return;
      RunRow row = MakeRow(plan, replication, t);
      const auto bound = plan.bounds.find(t);
      if (tracker) {
        const Certificate cert = tracker->Current();
        row.gap_or_eps = cert.eps;
        row.v_norm = cert.v_norm();
        if (bound != plan.bounds.end()) row.bound = Finite(bound->second.eps_bound);
      } else {
        row.gap_or_eps = GapBounded(r.problem, after.w_ag).value;
        if (bound != plan.bounds.end()) row.bound = Finite(bound->second.gap_bound);
      }
      row.ratio = Ratio(row.gap_or_eps, row.bound);
      out.rows.push_back(std::move(row));
    };

    Trajectory traj;
    if (plan.solver != SolverKind::kAmp) {
      traj = RunMirrorProx(r.problem, plan.geometry, plan.baseline_gamma, options);
    } else if (c.stochastic()) {
      StochasticOracle oracle(r.problem, c.noise_kind, c.sigma_g, c.sigma_h,
                              c.base_seed + static_cast<uint64_t>(replication));
      traj = Run(oracle, r.geometry, r.schedule, options);
    } else {
      traj = Run(r.problem, r.geometry, r.schedule, options);
    }
    out.counters = traj.counters;
  } catch (const std::exception& e) {
    out.rows.clear();
    out.error = e.what();
  }
  return out;
}

std::vector<ReplicationResult> RunAll(const RunPlan& plan, int replications, int jobs) {
  std::vector<ReplicationResult> results(replications);
  const int workers = std::max(1, std::min(jobs, replications));
  if (workers == 1) {
    for (int k = 0; k < replications; ++k) results[k] = RunReplication(plan, k);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int k = next++; k < replications; k = next++) results[k] = RunReplication(plan, k);
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

void Aggregate(const RunPlan& plan, const std::vector<ReplicationResult>& results,
               const ExperimentConfig& c, RunReport& report) {
  std::map<int, std::vector<double>> by_t;
  for (const auto& res : results) {
    for (const auto& row : res.rows) by_t[row.t].push_back(row.gap_or_eps);
  }
  std::vector<int> ts;
  std::vector<double> means;
  for (const auto& [t, values] : by_t) {
    AggregateRow agg;
    agg.run_id = plan.run_id;
    agg.t = t;
    agg.replications = static_cast<int>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    agg.mean = sum / values.size();
    agg.q05 = Quantile(values, 0.05);
    agg.q95 = Quantile(values, 0.95);
    const auto it = plan.bounds.find(t);
    if (it != plan.bounds.end()) {
      const TheoreticalBound& b = it->second;
      const bool unbounded = IsUnbounded(b.regime);
      agg.bound = Finite(unbounded ? b.eps_bound : b.gap_bound);
      agg.bound_printed = Finite(unbounded ? b.eps_bound_printed : b.gap_bound_printed);
      if (b.regime == Regime::kStochBounded) {
        const double lambda = c.tail_lambda;
        agg.tail_threshold = std::isfinite(b.c0) ? b.c0 + lambda * b.c1 : b.q0 + lambda * b.q1;
        int above = 0;
        for (double v : values) above += v > agg.tail_threshold ? 1 : 0;
        agg.tail_frequency = static_cast<double>(above) / values.size();
      }
    }
    agg.mean_ratio = Ratio(agg.mean, agg.bound);
    ts.push_back(t);
    means.push_back(agg.mean);
    report.aggregates.push_back(std::move(agg));
  }
  try {
    const SlopeFit fit = FitLogLogSlope(ts, means, c.slope_window);
    report.slopes.push_back(
        {plan.run_id, fit.slope, fit.intercept, fit.points, fit.t_begin, fit.t_end});
  } catch (const StatisticsError&) {
    // Too few positive points for a fit; the report simply has no slope.
  }
}

void AppendRun(const RunPlan& plan, int replications, const ExperimentConfig& c,
               RunReport& report) {
  const auto results = RunAll(plan, replications, c.jobs);
  OracleTotals totals;
  totals.run_id = plan.run_id;
  totals.iterations = c.iterations;
  for (int k = 0; k < replications; ++k) {
    const auto& res = results[k];
    if (res.error) {
      report.failures.push_back({plan.run_id, k, *res.error});
      continue;
    }
    totals.runs += 1;
    totals.grad_g_calls += res.counters.grad_g_calls;
    totals.h_calls += res.counters.h_calls;
    report.rows.insert(report.rows.end(), res.rows.begin(), res.rows.end());
  }
  report.oracle_totals.push_back(totals);
  Aggregate(plan, results, c, report);
}

bool SameInstance(const ExperimentConfig& a, const ExperimentConfig& b) {
  const auto ja = nlohmann::json::parse(ConfigToJson(a));
  const auto jb = nlohmann::json::parse(ConfigToJson(b));
  return ja["instance"] == jb["instance"] && ja["geometry"] == jb["geometry"];
}

}  // namespace

RunReport RunExperiment(const ExperimentConfig& config) {
  const auto clock = std::chrono::steady_clock::now();
  const ResolvedExperiment resolved = ResolveExperiment(config);
  std::vector<RunPlan> plans;
  plans.push_back(MakePlan(SolverKind::kAmp, config, resolved));
  for (SolverKind s : config.baselines) {
    if (s == SolverKind::kAmp) continue;
    plans.push_back(MakePlan(s, config, resolved));
  }

  RunReport report;
  report.config_json = ConfigToJson(config);
  for (const RunPlan& plan : plans) {
    // Baselines are deterministic, so one run says everything.
    const int reps = plan.solver == SolverKind::kAmp ? config.replications : 1;
    AppendRun(plan, reps, config, report);
  }
  if (config.include_timing) {
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - clock).count();
  }
  return report;
}

ComparisonTable CompareMatrix(const std::vector<ExperimentConfig>& configs,
                              const std::vector<SolverKind>& solvers) {
  ComparisonTable table;
  if (solvers.empty() || configs.empty()) return table;
  for (const auto& c : configs) {
    if (!SameInstance(configs.front(), c)) {
      throw ConfigError("compare: config '" + c.name + "' describes a different instance");
    }
    if (c.stochastic()) throw ConfigError("compare: config '" + c.name + "' is stochastic");
  }
  for (const auto& c : configs) {
    const ResolvedExperiment r = ResolveExperiment(c);
    if (!r.problem.set.IsBounded()) {
      throw ConfigError("compare: config '" + c.name + "' has an unbounded set");
    }
    for (SolverKind solver : solvers) {
      const RunPlan plan = MakePlan(solver, c, r);
      std::vector<ComparisonRow> rows;
      RunOptions options;
      options.iterations = c.iterations;
      options.start = r.start;
      options.history = HistoryMode::kFinalOnly;
      options.observer = [&](const IterateState& before, const IterateState& after,
                             const NoiseLogEntry*) {
        const int t = before.t;
        if (!plan.is_checkpoint[t]) return;
        rows.push_back({c.name, plan.run_id, t, GapBounded(r.problem, after.w_ag).value,
                        GapBounded(r.problem, after.w).value});
      };
      if (solver == SolverKind::kAmp) {
        Run(r.problem, r.geometry, r.schedule, options);
      } else {
        RunMirrorProx(r.problem, plan.geometry, plan.baseline_gamma, options);
      }
      for (double target : c.targets) {
        TargetRecord rec{c.name, plan.run_id, target, -1};
        for (const auto& row : rows) {
          if (row.output_gap <= target) {
            rec.iterations = row.t;
            break;
          }
        }
        table.targets.push_back(rec);
      }
      table.rows.insert(table.rows.end(), rows.begin(), rows.end());
    }
  }
  return table;
}

}  // namespace ampvi
