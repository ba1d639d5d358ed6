// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

// ampvi: run, compare and validate experiments from config files.
//
// Exit codes: 0 success, 1 invalid config, 2 runtime failure.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ampvi/errors.h"
#include "ampvi/harness/config.h"
#include "ampvi/harness/experiment.h"
#include "ampvi/harness/report_io.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitRuntime = 2;

struct Overrides {
  std::optional<uint64_t> seed;
  std::optional<int> reps;
  std::optional<int> iters;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<int> jobs;
  bool timing = false;
};

void AddOverrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--seed", o.seed, "Base seed for replications");
  cmd->add_option("--reps", o.reps, "Number of replications");
  cmd->add_option("--iters", o.iters, "Iteration budget N");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--jobs", o.jobs, "Worker threads for replications");
  cmd->add_flag("--timing", o.timing, "Record wall-clock time in the report");
}

void Apply(const Overrides& o, ampvi::ExperimentConfig& c) {
  if (o.seed) c.base_seed = *o.seed;
  if (o.reps) c.replications = *o.reps;
  if (o.iters) {
    c.iterations = *o.iters;
    // Checkpoints past the new budget are dropped; an empty list means all.
    std::erase_if(c.checkpoints, [&](int t) { return t > c.iterations; });
  }
  if (o.out) c.out_dir = *o.out;
  if (o.format) c.format = ampvi::ParseOutputFormat(*o.format);
  if (o.jobs) c.jobs = *o.jobs;
  if (o.timing) c.include_timing = true;
}

void PrintSummary(const ampvi::RunReport& report) {
  std::map<std::string, const ampvi::AggregateRow*> last;
  for (const auto& a : report.aggregates) last[a.run_id] = &a;
  for (const auto& [run_id, a] : last) {
    std::printf("%-14s t=%-6d mean=%.6g bound=%.6g ratio=%.4g reps=%d\n", run_id.c_str(),
                a->t, a->mean, a->bound, a->mean_ratio, a->replications);
  }
  for (const auto& s : report.slopes) {
    std::printf("%-14s slope=%.4f over t in [%d, %d]\n", s.run_id.c_str(), s.slope, s.t_begin,
                s.t_end);
  }
  for (const auto& o : report.oracle_totals) {
    std::printf("%-14s runs=%d grad_g_calls=%ld h_calls=%ld\n", o.run_id.c_str(), o.runs,
                o.grad_g_calls, o.h_calls);
  }
  for (const auto& f : report.failures) {
    std::fprintf(stderr, "failure: %s replication %d: %s\n", f.run_id.c_str(), f.replication,
                 f.message.c_str());
  }
}

int RunAndEmit(const ampvi::ExperimentConfig& config) {
  const ampvi::RunReport report = ampvi::RunExperiment(config);
  PrintSummary(report);
  for (const auto& path : ampvi::Emit(report, config.format, config.out_dir)) {
    std::printf("wrote %s\n", path.c_str());
  }
  return report.failures.empty() ? kExitOk : kExitRuntime;
}

int Validate(const ampvi::ExperimentConfig& config) {
  const ampvi::ResolvedExperiment r = ampvi::ResolveExperiment(config);
  std::printf("ok: %s, %s, dimension %d, regime %s\n", config.name.c_str(),
              ampvi::ProblemKindName(config.kind).c_str(), r.problem.dimension(),
              ampvi::RegimeName(r.schedule.regime()).c_str());
  std::printf("L_G=%.6g L_H=%.6g", r.problem.lipschitz_g, r.problem.lipschitz_h);
  if (r.omega_sq) std::printf(" Omega^2=%.6g", *r.omega_sq);
  if (r.distance) std::printf(" D=%.6g", *r.distance);
  if (r.schedule.horizon()) std::printf(" horizon=%d", *r.schedule.horizon());
  std::printf("\n");
  return kExitOk;
}

// Maps library exceptions onto exit codes.
template <class F>
int Guard(F&& body) {
  try {
    return body();
  } catch (const ampvi::ConfigError& e) {
    std::fprintf(stderr, "invalid config: %s\n", e.what());
    return kExitInvalid;
  } catch (const ampvi::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Accelerated mirror-prox experiments for monotone variational inequalities"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> compare_paths;
  std::vector<std::string> solver_names = {"amp", "mirror-prox"};
  std::string demo_kind;
  Overrides overrides;

  auto* run = app.add_subcommand("run", "Run an experiment and write its report");
  run->add_option("config", config_path, "Config file (.ini-style text or .json)")->required();
  AddOverrides(run, overrides);

  auto* compare = app.add_subcommand("compare", "Compare solvers on one instance");
  compare->add_option("configs", compare_paths, "Config files sharing one instance")
      ->required();
  compare->add_option("--solvers", solver_names, "amp, mirror-prox, extragradient")
      ->delimiter(',');
  AddOverrides(compare, overrides);

  auto* validate = app.add_subcommand("validate", "Check a config without running it");
  validate->add_option("config", config_path, "Config file")->required();
  AddOverrides(validate, overrides);

  auto* demo = app.add_subcommand("demo", "Run a small built-in experiment");
  demo->add_option("kind", demo_kind, "quadratic-min, bilinear-saddle or skew-plus-gradient")
      ->required();
  AddOverrides(demo, overrides);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  auto load = [&](const std::string& path) {
    ampvi::ExperimentConfig c = ampvi::LoadConfig(path);
    Apply(overrides, c);
    return c;
  };

  if (*run) return Guard([&] { return RunAndEmit(load(config_path)); });
  if (*validate) return Guard([&] { return Validate(load(config_path)); });
  if (*demo) {
    return Guard([&] {
      ampvi::ExperimentConfig c = ampvi::DemoConfig(ampvi::ParseProblemKind(demo_kind));
      Apply(overrides, c);
      return RunAndEmit(c);
    });
  }
  return Guard([&] {
    std::vector<ampvi::ExperimentConfig> configs;
    for (const auto& path : compare_paths) configs.push_back(load(path));
    std::vector<ampvi::SolverKind> solvers;
    for (const auto& name : solver_names) solvers.push_back(ampvi::ParseSolverKind(name));
    const ampvi::ComparisonTable table = ampvi::CompareMatrix(configs, solvers);
    for (const auto& t : table.targets) {
      std::printf("%-20s %-14s target=%.3g iterations=%d\n", t.config.c_str(),
                  t.solver.c_str(), t.target, t.iterations);
    }
    const auto& first = configs.front();
    for (const auto& path : ampvi::EmitComparison(table, first.format, first.out_dir)) {
      std::printf("wrote %s\n", path.c_str());
    }
    return kExitOk;
  });
}
