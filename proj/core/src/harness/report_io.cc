// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ampvi/harness/report_io.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ampvi/errors.h"
#include "json.hpp"

namespace ampvi {
namespace {

using Json = nlohmann::ordered_json;

std::string Num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// RFC 4180 quoting for free-text fields.
std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string WithHeader(const char* header, const std::vector<std::string>& lines) {
  std::string out = header;
  out += '\n';
  for (const auto& line : lines) out += line + '\n';
  return out;
}

std::string SlopesCsv(const RunReport& r) {
  std::vector<std::string> lines;
  for (const auto& s : r.slopes) {
    lines.push_back(s.run_id + "," + Num(s.slope) + "," + Num(s.intercept) + "," +
                    std::to_string(s.points) + "," + std::to_string(s.t_begin) + "," +
                    std::to_string(s.t_end));
  }
  return WithHeader(kSlopesHeader, lines);
}

std::string TotalsCsv(const RunReport& r) {
  std::vector<std::string> lines;
  for (const auto& o : r.oracle_totals) {
    lines.push_back(o.run_id + "," + std::to_string(o.runs) + "," +
                    std::to_string(o.iterations) + "," + std::to_string(o.grad_g_calls) + "," +
                    std::to_string(o.h_calls));
  }
  return WithHeader(kTotalsHeader, lines);
}

std::string FailuresCsv(const RunReport& r) {
  std::vector<std::string> lines;
  for (const auto& f : r.failures) {
    lines.push_back(f.run_id + "," + std::to_string(f.replication) + "," + Quote(f.message));
  }
  return WithHeader(kFailuresHeader, lines);
}

std::string WriteFile(const std::filesystem::path& dir, const std::string& name,
                      const std::string& content) {
  const auto path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
  return path.string();
}

std::filesystem::path PrepareDir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec || !std::filesystem::is_directory(p)) {
    throw IoError("cannot create output directory '" + dir + "'");
  }
  return p;
}

template <class T>
T Get(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("report JSON lacks '") + key + "'");
  return j.at(key).get<T>();
}

}  // namespace

std::string RunsCsv(const RunReport& report) {
  std::vector<std::string> lines;
  lines.reserve(report.rows.size());
  for (const auto& r : report.rows) {
    lines.push_back(r.run_id + "," + std::to_string(r.replication) + "," +
                    std::to_string(r.t) + "," + Num(r.alpha) + "," + Num(r.gamma) + "," +
                    Num(r.gap_or_eps) + "," + Num(r.v_norm) + "," + Num(r.bound) + "," +
                    Num(r.ratio));
  }
  return WithHeader(kRunsHeader, lines);
}

std::string AggregateCsv(const RunReport& report) {
  std::vector<std::string> lines;
  for (const auto& a : report.aggregates) {
    lines.push_back(a.run_id + "," + std::to_string(a.t) + "," +
                    std::to_string(a.replications) + "," + Num(a.mean) + "," + Num(a.q05) +
                    "," + Num(a.q95) + "," + Num(a.bound) + "," + Num(a.bound_printed) + "," +
                    Num(a.mean_ratio) + "," + Num(a.tail_threshold) + "," +
                    Num(a.tail_frequency));
  }
  return WithHeader(kAggregateHeader, lines);
}

std::string ReportToJson(const RunReport& report) {
  Json j;
  j["schema_version"] = report.schema_version;
  j["config"] = report.config_json.empty() ? Json::object() : Json::parse(report.config_json);
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"run_id", r.run_id},
                    {"replication", r.replication},
                    {"t", r.t},
                    {"alpha", r.alpha},
                    {"gamma", r.gamma},
                    {"gap_or_eps", r.gap_or_eps},
                    {"v_norm", r.v_norm},
                    {"bound", r.bound},
                    {"ratio", r.ratio}});
  }
  j["rows"] = rows;
  Json aggs = Json::array();
  for (const auto& a : report.aggregates) {
    aggs.push_back({{"run_id", a.run_id},
                    {"t", a.t},
                    {"replications", a.replications},
                    {"mean", a.mean},
                    {"q05", a.q05},
                    {"q95", a.q95},
                    {"bound", a.bound},
                    {"bound_printed", a.bound_printed},
                    {"mean_ratio", a.mean_ratio},
                    {"tail_threshold", a.tail_threshold},
                    {"tail_frequency", a.tail_frequency}});
  }
  j["aggregates"] = aggs;
  Json slopes = Json::array();
  for (const auto& s : report.slopes) {
    slopes.push_back({{"run_id", s.run_id},
                      {"slope", s.slope},
                      {"intercept", s.intercept},
                      {"points", s.points},
                      {"t_begin", s.t_begin},
                      {"t_end", s.t_end}});
  }
  j["slopes"] = slopes;
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back(
        {{"run_id", f.run_id}, {"replication", f.replication}, {"message", f.message}});
  }
  j["failures"] = failures;
  Json totals = Json::array();
  for (const auto& o : report.oracle_totals) {
    totals.push_back({{"run_id", o.run_id},
                      {"runs", o.runs},
                      {"iterations", o.iterations},
                      {"grad_g_calls", o.grad_g_calls},
                      {"h_calls", o.h_calls}});
  }
  j["oracle_totals"] = totals;
  if (report.wall_seconds) j["wall_seconds"] = *report.wall_seconds;
  return j.dump(2) + "\n";
}

RunReport ReportFromJson(const std::string& text) {
  RunReport r;
  try {
    const Json j = Json::parse(text);
    r.schema_version = Get<int>(j, "schema_version");
    if (r.schema_version != kReportSchemaVersion) {
      throw InputError("unsupported report schema_version " + std::to_string(r.schema_version));
    }
    const Json& config = j.at("config");
    r.config_json = config.empty() ? "" : config.dump(2);
    for (const auto& x : j.at("rows")) {
      r.rows.push_back({Get<std::string>(x, "run_id"), Get<int>(x, "replication"),
                        Get<int>(x, "t"), Get<double>(x, "alpha"), Get<double>(x, "gamma"),
                        Get<double>(x, "gap_or_eps"), Get<double>(x, "v_norm"),
                        Get<double>(x, "bound"), Get<double>(x, "ratio")});
    }
    for (const auto& x : j.at("aggregates")) {
      r.aggregates.push_back(
          {Get<std::string>(x, "run_id"), Get<int>(x, "t"), Get<int>(x, "replications"),
           Get<double>(x, "mean"), Get<double>(x, "q05"), Get<double>(x, "q95"),
           Get<double>(x, "bound"), Get<double>(x, "bound_printed"),
           Get<double>(x, "mean_ratio"), Get<double>(x, "tail_threshold"),
           Get<double>(x, "tail_frequency")});
    }
    for (const auto& x : j.at("slopes")) {
      r.slopes.push_back({Get<std::string>(x, "run_id"), Get<double>(x, "slope"),
                          Get<double>(x, "intercept"), Get<int>(x, "points"),
                          Get<int>(x, "t_begin"), Get<int>(x, "t_end")});
    }
    for (const auto& x : j.at("failures")) {
      r.failures.push_back({Get<std::string>(x, "run_id"), Get<int>(x, "replication"),
                            Get<std::string>(x, "message")});
    }
    for (const auto& x : j.at("oracle_totals")) {
      r.oracle_totals.push_back({Get<std::string>(x, "run_id"), Get<int>(x, "runs"),
                                 Get<int>(x, "iterations"), Get<long>(x, "grad_g_calls"),
                                 Get<long>(x, "h_calls")});
    }
    if (j.contains("wall_seconds")) r.wall_seconds = j.at("wall_seconds").get<double>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
  return r;
}

std::vector<std::string> Emit(const RunReport& report, OutputFormat format,
                              const std::string& dir) {
  const auto p = PrepareDir(dir);
  if (format == OutputFormat::kJson) return {WriteFile(p, "report.json", ReportToJson(report))};
  return {WriteFile(p, "runs.csv", RunsCsv(report)),
          WriteFile(p, "aggregate.csv", AggregateCsv(report)),
          WriteFile(p, "slopes.csv", SlopesCsv(report)),
          WriteFile(p, "totals.csv", TotalsCsv(report)),
          WriteFile(p, "failures.csv", FailuresCsv(report))};
}

std::string ComparisonCsv(const ComparisonTable& table) {
  std::vector<std::string> lines;
  for (const auto& r : table.rows) {
    lines.push_back(Quote(r.config) + "," + r.solver + "," + std::to_string(r.t) + "," +
                    Num(r.output_gap) + "," + Num(r.last_iterate_gap));
  }
  return WithHeader(kComparisonHeader, lines);
}

std::string TargetsCsv(const ComparisonTable& table) {
  std::vector<std::string> lines;
  for (const auto& r : table.targets) {
    lines.push_back(Quote(r.config) + "," + r.solver + "," + Num(r.target) + "," +
                    std::to_string(r.iterations));
  }
  return WithHeader(kTargetsHeader, lines);
}

std::string ComparisonToJson(const ComparisonTable& table) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"config", r.config},
                    {"solver", r.solver},
                    {"t", r.t},
                    {"output_gap", r.output_gap},
                    {"last_iterate_gap", r.last_iterate_gap}});
  }
  j["rows"] = rows;
  Json targets = Json::array();
  for (const auto& r : table.targets) {
    targets.push_back({{"config", r.config},
                       {"solver", r.solver},
                       {"target", r.target},
                       {"iterations", r.iterations}});
  }
  j["targets"] = targets;
  return j.dump(2) + "\n";
}

std::vector<std::string> EmitComparison(const ComparisonTable& table, OutputFormat format,
                                        const std::string& dir) {
  const auto p = PrepareDir(dir);
  if (format == OutputFormat::kJson) {
    return {WriteFile(p, "comparison.json", ComparisonToJson(table))};
  }
  return {WriteFile(p, "comparison.csv", ComparisonCsv(table)),
          WriteFile(p, "targets.csv", TargetsCsv(table))};
}

}  // namespace ampvi
