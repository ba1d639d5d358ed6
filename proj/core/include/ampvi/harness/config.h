// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef AMPVI_HARNESS_CONFIG_H_
#define AMPVI_HARNESS_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ampvi/evaluation.h"
#include "ampvi/problems.h"
#include "ampvi/schedules.h"
#include "ampvi/stochastic_oracle.h"

namespace ampvi {

enum class SolverKind { kAmp, kMirrorProx, kExtragradient };

std::string SolverKindName(SolverKind kind);
SolverKind ParseSolverKind(const std::string& name);

enum class OutputFormat { kCsv, kJson };

std::string OutputFormatName(OutputFormat format);
OutputFormat ParseOutputFormat(const std::string& name);

// Alpha sequence of a custom schedule.
enum class CustomAlpha { kOne, kTwoOverTPlusOne };

struct ExperimentConfig {
  std::string name = "experiment";

  // [instance]
  ProblemKind kind = ProblemKind::kQuadraticMin;
  int dimension = 2;
  uint64_t instance_seed = 1;
  InstanceConstants constants;  // constants.geometry is set from [geometry]

  // [schedule]
  Regime regime = Regime::kDetBounded;
  int horizon = 0;  // 0: the iteration budget, for unbounded regimes
  double gamma_scale = 1.0;
  // D-tilde. Unset means the true distance from the start to the solution.
  std::optional<double> distance_guess;
  CustomAlpha custom_alpha = CustomAlpha::kOne;
  double custom_gamma = 0.0;
  // Step of the mirror-prox and extragradient baselines; 0 means mu / L_F.
  double baseline_gamma = 0.0;

  // [noise]
  NoiseKind noise_kind = NoiseKind::kGaussian;
  double sigma_g = 0.0;
  double sigma_h = 0.0;

  // [run]
  int iterations = 100;
  int replications = 1;
  uint64_t base_seed = 0;
  std::vector<SolverKind> baselines;
  int jobs = 1;
  std::vector<int> checkpoints;  // empty: every iteration
  double tail_lambda = 4.0;
  std::optional<SlopeWindow> slope_window;
  std::vector<double> targets;
  bool include_timing = false;

  // [output]
  std::string out_dir = "ampvi-out";
  OutputFormat format = OutputFormat::kCsv;

  bool stochastic() const { return IsStochastic(regime); }
};

// Flat text format:
//
//   # comment
//   [instance]
//   kind = quadratic-min
//   dimension = 10
//
// Unknown sections or keys are rejected. Lists are comma separated.
ExperimentConfig ParseConfigText(const std::string& text);

// The same keys nested by section, plus "schema_version": 1.
ExperimentConfig ParseConfigJson(const std::string& text);

// Chooses the parser from the extension (.json) or a leading '{'.
ExperimentConfig LoadConfig(const std::string& path);

std::string ConfigToJson(const ExperimentConfig& config);
std::string ConfigToText(const ExperimentConfig& config);

// Small ready-to-run config for each generated instance kind.
ExperimentConfig DemoConfig(ProblemKind kind);

// Everything a run needs, derived from a config. Building it validates the
// config, including the schedule's regime condition.
struct ResolvedExperiment {
  ProblemSpec problem;
  GeometrySetup geometry;
  Schedule schedule;
  Vector start;
  std::optional<double> omega_sq;  // bounded sets
  std::optional<double> distance;  // known solution
  std::vector<int> checkpoints;
};

// Throws ConfigError (ScheduleError for regime violations).
ResolvedExperiment ResolveExperiment(const ExperimentConfig& config);

}  // namespace ampvi

#endif  // AMPVI_HARNESS_CONFIG_H_
