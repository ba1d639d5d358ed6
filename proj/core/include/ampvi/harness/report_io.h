// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef AMPVI_HARNESS_REPORT_IO_H_
#define AMPVI_HARNESS_REPORT_IO_H_

#include <string>
#include <vector>

#include "ampvi/harness/config.h"
#include "ampvi/harness/experiment.h"

namespace ampvi {

// Column headers. Stable across releases; changes bump the schema version.
inline constexpr char kRunsHeader[] = "run_id,replication,t,alpha,gamma,gap_or_eps,v_norm,bound,ratio";
inline constexpr char kAggregateHeader[] =
    "run_id,t,replications,mean,q05,q95,bound,bound_printed,mean_ratio,tail_threshold,"
    "tail_frequency";
inline constexpr char kSlopesHeader[] = "run_id,slope,intercept,points,t_begin,t_end";
inline constexpr char kTotalsHeader[] = "run_id,runs,iterations,grad_g_calls,h_calls";
inline constexpr char kFailuresHeader[] = "run_id,replication,message";
inline constexpr char kComparisonHeader[] = "config,solver,t,output_gap,last_iterate_gap";
inline constexpr char kTargetsHeader[] = "config,solver,target,iterations";

std::string RunsCsv(const RunReport& report);
std::string AggregateCsv(const RunReport& report);

std::string ReportToJson(const RunReport& report);
// Throws InputError on malformed input or an unknown schema version.
RunReport ReportFromJson(const std::string& text);

// Writes the report into `dir` (created if missing) and returns the paths.
//   csv:  runs.csv, aggregate.csv, slopes.csv, totals.csv, failures.csv
//   json: report.json
// Throws IoError when a file cannot be written.
std::vector<std::string> Emit(const RunReport& report, OutputFormat format,
                              const std::string& dir);

std::string ComparisonCsv(const ComparisonTable& table);
std::string TargetsCsv(const ComparisonTable& table);
std::string ComparisonToJson(const ComparisonTable& table);

//   csv:  comparison.csv, targets.csv
//   json: comparison.json
std::vector<std::string> EmitComparison(const ComparisonTable& table, OutputFormat format,
                                        const std::string& dir);

}  // namespace ampvi

#endif  // AMPVI_HARNESS_REPORT_IO_H_
