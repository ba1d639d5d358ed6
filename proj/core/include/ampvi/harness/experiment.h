// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef AMPVI_HARNESS_EXPERIMENT_H_
#define AMPVI_HARNESS_EXPERIMENT_H_

#include <optional>
#include <string>
#include <vector>

#include "ampvi/harness/config.h"

namespace ampvi {

inline constexpr int kReportSchemaVersion = 1;

// One row per (run_id, replication, checkpoint). `gap_or_eps` is the gap of
// the output point on bounded sets and the certificate eps otherwise.
// Columns that do not apply hold 0.
struct RunRow {
  std::string run_id;
  int replication = 0;
  int t = 0;
  double alpha = 0.0;
  double gamma = 0.0;
  double gap_or_eps = 0.0;
  double v_norm = 0.0;
  double bound = 0.0;
  double ratio = 0.0;

  bool operator==(const RunRow&) const = default;
};

// Statistics across replications at one checkpoint.
struct AggregateRow {
  std::string run_id;
  int t = 0;
  int replications = 0;
  double mean = 0.0;
  double q05 = 0.0;
  double q95 = 0.0;
  double bound = 0.0;          // theorem bound (expectation bound if stochastic)
  double bound_printed = 0.0;  // closed form for the published schedule
  double mean_ratio = 0.0;
  double tail_threshold = 0.0;  // stoch-bounded only
  double tail_frequency = 0.0;

  bool operator==(const AggregateRow&) const = default;
};

struct SlopeRecord {
  std::string run_id;
  double slope = 0.0;
  double intercept = 0.0;
  int points = 0;
  int t_begin = 0;
  int t_end = 0;

  bool operator==(const SlopeRecord&) const = default;
};

struct FailureRecord {
  std::string run_id;
  int replication = 0;
  std::string message;

  bool operator==(const FailureRecord&) const = default;
};

struct OracleTotals {
  std::string run_id;
  int runs = 0;
  int iterations = 0;  // per run
  long grad_g_calls = 0;
  long h_calls = 0;

  bool operator==(const OracleTotals&) const = default;
};

struct RunReport {
  int schema_version = kReportSchemaVersion;
  std::string config_json;  // ConfigToJson of the config that produced it
  std::vector<RunRow> rows;
  std::vector<AggregateRow> aggregates;
  std::vector<SlopeRecord> slopes;
  std::vector<FailureRecord> failures;
  std::vector<OracleTotals> oracle_totals;
  // Only with include_timing; absent by default so reports stay reproducible.
  std::optional<double> wall_seconds;

  bool operator==(const RunReport&) const = default;
};

// Runs every replication of AMP plus the configured baselines. Replication k
// uses seed base_seed + k. Replications are spread over `jobs` threads and
// merged in index order, so the report does not depend on `jobs`.
// Throws ConfigError for invalid configs. Failures inside a run become
// FailureRecords.
RunReport RunExperiment(const ExperimentConfig& config);

struct ComparisonRow {
  std::string config;
  std::string solver;
  int t = 0;
  double output_gap = 0.0;
  double last_iterate_gap = 0.0;  // gap of w_{t+1}
};

struct TargetRecord {
  std::string config;
  std::string solver;
  double target = 0.0;
  int iterations = -1;  // first checkpoint with output gap <= target; -1 if never
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  std::vector<TargetRecord> targets;

  bool empty() const { return rows.empty(); }
};

// Runs each solver on each (deterministic, bounded) config. The configs must
// describe the same instance; otherwise ConfigError.
ComparisonTable CompareMatrix(const std::vector<ExperimentConfig>& configs,
                              const std::vector<SolverKind>& solvers);

}  // namespace ampvi

#endif  // AMPVI_HARNESS_EXPERIMENT_H_
