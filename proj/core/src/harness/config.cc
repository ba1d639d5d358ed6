// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ampvi/harness/config.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ampvi/errors.h"
#include "json.hpp"

namespace ampvi {
namespace {

using Json = nlohmann::ordered_json;

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> SplitList(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double ToDouble(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' expects a number, got '" + value + "'");
  }
}

long long ToInteger(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' expects an integer, got '" + value + "'");
  }
}

int ToInt(const std::string& key, const std::string& value) {
  return static_cast<int>(ToInteger(key, value));
}

uint64_t ToSeed(const std::string& key, const std::string& value) {
  const long long v = ToInteger(key, value);
  if (v < 0) throw ConfigError("key '" + key + "' expects a nonnegative seed");
  return static_cast<uint64_t>(v);
}

bool ToBool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("key '" + key + "' expects true or false, got '" + value + "'");
}

std::string MatrixName(BilinearMatrix m) {
  switch (m) {
    case BilinearMatrix::kIdentity:
      return "identity";
    case BilinearMatrix::kGaussian:
      return "gaussian";
    case BilinearMatrix::kLogSpectrum:
      return "log-spectrum";
  }
  return "gaussian";
}

BilinearMatrix ParseMatrix(const std::string& v) {
  if (v == "identity") return BilinearMatrix::kIdentity;
  if (v == "gaussian") return BilinearMatrix::kGaussian;
  if (v == "log-spectrum") return BilinearMatrix::kLogSpectrum;
  throw ConfigError("unknown bilinear matrix '" + v + "'");
}

std::string DomainName(BilinearDomain d) {
  return d == BilinearDomain::kSimplex ? "simplex" : "ball";
}

BilinearDomain ParseDomain(const std::string& v) {
  if (v == "simplex") return BilinearDomain::kSimplex;
  if (v == "ball") return BilinearDomain::kBall;
  throw ConfigError("unknown bilinear domain '" + v + "'");
}

GeometrySetup ParseGeometry(const std::string& v) {
  if (v == "euclidean") return GeometrySetup::Euclidean();
  if (v == "entropy") return GeometrySetup::Entropy();
  throw ConfigError("unknown geometry '" + v + "'");
}

std::string CustomAlphaName(CustomAlpha a) {
  return a == CustomAlpha::kOne ? "one" : "two-over-t-plus-one";
}

CustomAlpha ParseCustomAlpha(const std::string& v) {
  if (v == "one") return CustomAlpha::kOne;
  if (v == "two-over-t-plus-one") return CustomAlpha::kTwoOverTPlusOne;
  throw ConfigError("unknown custom alpha '" + v + "'");
}

template <class T, class F>
std::string JoinList(const std::vector<T>& items, F&& fmt) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ",";
    out += fmt(items[i]);
  }
  return out;
}

std::string FormatDouble(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// One setter per "section.key".
using Setter = std::function<void(ExperimentConfig&, const std::string&)>;

const std::map<std::string, Setter>& Setters() {
  static const std::map<std::string, Setter> setters = [] {
    std::map<std::string, Setter> m;
    auto dbl = [](double InstanceConstants::*field, const char* key) {
      return [field, key](ExperimentConfig& c, const std::string& v) {
        c.constants.*field = ToDouble(key, v);
      };
    };
    m["experiment.name"] = [](ExperimentConfig& c, const std::string& v) { c.name = v; };

    m["instance.kind"] = [](ExperimentConfig& c, const std::string& v) {
      c.kind = ParseProblemKind(v);
    };
    m["instance.dimension"] = [](ExperimentConfig& c, const std::string& v) {
      c.dimension = ToInt("dimension", v);
    };
    m["instance.seed"] = [](ExperimentConfig& c, const std::string& v) {
      c.instance_seed = ToSeed("seed", v);
    };
    m["instance.spectrum"] = [](ExperimentConfig& c, const std::string& v) {
      c.constants.spectrum.clear();
      for (const auto& item : SplitList(v)) {
        c.constants.spectrum.push_back(ToDouble("spectrum", item));
      }
    };
    m["instance.spectrum_min"] = dbl(&InstanceConstants::spectrum_min, "spectrum_min");
    m["instance.spectrum_max"] = dbl(&InstanceConstants::spectrum_max, "spectrum_max");
    m["instance.minimizer"] = dbl(&InstanceConstants::minimizer, "minimizer");
    m["instance.box_lower"] = dbl(&InstanceConstants::box_lower, "box_lower");
    m["instance.box_upper"] = dbl(&InstanceConstants::box_upper, "box_upper");
    m["instance.l1_weight"] = dbl(&InstanceConstants::l1_weight, "l1_weight");
    m["instance.matrix"] = [](ExperimentConfig& c, const std::string& v) {
      c.constants.matrix = ParseMatrix(v);
    };
    m["instance.domain"] = [](ExperimentConfig& c, const std::string& v) {
      c.constants.domain = ParseDomain(v);
    };
    m["instance.simplex_pad"] = dbl(&InstanceConstants::simplex_pad, "simplex_pad");
    m["instance.ball_radius"] = dbl(&InstanceConstants::ball_radius, "ball_radius");
    m["instance.spectrum_low"] = dbl(&InstanceConstants::spectrum_low, "spectrum_low");
    m["instance.shift_norm"] = dbl(&InstanceConstants::shift_norm, "shift_norm");
    m["instance.skew_norm"] = dbl(&InstanceConstants::skew_norm, "skew_norm");
    m["instance.curvature"] = dbl(&InstanceConstants::curvature, "curvature");
    m["instance.smooth_lipschitz"] =
        dbl(&InstanceConstants::smooth_lipschitz, "smooth_lipschitz");
    m["instance.solution_scale"] = dbl(&InstanceConstants::solution_scale, "solution_scale");

    m["geometry.kind"] = [](ExperimentConfig& c, const std::string& v) {
      c.constants.geometry = ParseGeometry(v);
    };

    m["schedule.regime"] = [](ExperimentConfig& c, const std::string& v) {
      c.regime = ParseRegime(v);
    };
    m["schedule.horizon"] = [](ExperimentConfig& c, const std::string& v) {
      c.horizon = ToInt("horizon", v);
    };
    m["schedule.gamma_scale"] = [](ExperimentConfig& c, const std::string& v) {
      c.gamma_scale = ToDouble("gamma_scale", v);
    };
    m["schedule.distance_guess"] = [](ExperimentConfig& c, const std::string& v) {
      if (v == "true") {
        c.distance_guess.reset();
      } else {
        c.distance_guess = ToDouble("distance_guess", v);
      }
    };
    m["schedule.custom_alpha"] = [](ExperimentConfig& c, const std::string& v) {
      c.custom_alpha = ParseCustomAlpha(v);
    };
    m["schedule.custom_gamma"] = [](ExperimentConfig& c, const std::string& v) {
      c.custom_gamma = ToDouble("custom_gamma", v);
    };
    m["schedule.baseline_gamma"] = [](ExperimentConfig& c, const std::string& v) {
      c.baseline_gamma = ToDouble("baseline_gamma", v);
    };

    m["noise.kind"] = [](ExperimentConfig& c, const std::string& v) {
      c.noise_kind = ParseNoiseKind(v);
    };
    m["noise.sigma_g"] = [](ExperimentConfig& c, const std::string& v) {
      c.sigma_g = ToDouble("sigma_g", v);
    };
    m["noise.sigma_h"] = [](ExperimentConfig& c, const std::string& v) {
      c.sigma_h = ToDouble("sigma_h", v);
    };

    m["run.iterations"] = [](ExperimentConfig& c, const std::string& v) {
      c.iterations = ToInt("iterations", v);
    };
    m["run.replications"] = [](ExperimentConfig& c, const std::string& v) {
      c.replications = ToInt("replications", v);
    };
    m["run.base_seed"] = [](ExperimentConfig& c, const std::string& v) {
      c.base_seed = ToSeed("base_seed", v);
    };
    m["run.baselines"] = [](ExperimentConfig& c, const std::string& v) {
      c.baselines.clear();
      for (const auto& item : SplitList(v)) c.baselines.push_back(ParseSolverKind(item));
    };
    m["run.jobs"] = [](ExperimentConfig& c, const std::string& v) {
      c.jobs = ToInt("jobs", v);
    };
    m["run.checkpoints"] = [](ExperimentConfig& c, const std::string& v) {
      c.checkpoints.clear();
      if (v == "all") return;
      for (const auto& item : SplitList(v)) c.checkpoints.push_back(ToInt("checkpoints", item));
    };
    m["run.tail_lambda"] = [](ExperimentConfig& c, const std::string& v) {
      c.tail_lambda = ToDouble("tail_lambda", v);
    };
    m["run.slope_window"] = [](ExperimentConfig& c, const std::string& v) {
      const auto items = SplitList(v);
      if (items.empty()) {
        c.slope_window.reset();
        return;
      }
      if (items.size() != 2) throw ConfigError("slope_window expects 'begin, end'");
      c.slope_window = SlopeWindow{ToInt("slope_window", items[0]),
                                   ToInt("slope_window", items[1])};
    };
    m["run.targets"] = [](ExperimentConfig& c, const std::string& v) {
      c.targets.clear();
      for (const auto& item : SplitList(v)) c.targets.push_back(ToDouble("targets", item));
    };
    m["run.include_timing"] = [](ExperimentConfig& c, const std::string& v) {
      c.include_timing = ToBool("include_timing", v);
    };

    m["output.dir"] = [](ExperimentConfig& c, const std::string& v) { c.out_dir = v; };
    m["output.format"] = [](ExperimentConfig& c, const std::string& v) {
      c.format = ParseOutputFormat(v);
    };
    return m;
  }();
  return setters;
}

void Apply(ExperimentConfig& c, const std::string& section, const std::string& key,
           const std::string& value) {
  const auto it = Setters().find(section + "." + key);
  if (it == Setters().end()) {
    throw ConfigError("unknown config key '" + key + "' in section [" + section + "]");
  }
  it->second(c, value);
}

// Ordered (section, key, value) triples describing a config. Shared by the
// text and JSON writers so they stay in sync with the parsers.
struct Entry {
  std::string section;
  std::string key;
  Json value;
};

std::vector<Entry> Entries(const ExperimentConfig& c) {
  const InstanceConstants& k = c.constants;
  std::vector<Entry> e;
  e.push_back({"experiment", "name", c.name});
  e.push_back({"instance", "kind", ProblemKindName(c.kind)});
  e.push_back({"instance", "dimension", c.dimension});
  e.push_back({"instance", "seed", c.instance_seed});
  switch (c.kind) {
    case ProblemKind::kQuadraticMin:
      if (!k.spectrum.empty()) e.push_back({"instance", "spectrum", k.spectrum});
      e.push_back({"instance", "spectrum_min", k.spectrum_min});
      e.push_back({"instance", "spectrum_max", k.spectrum_max});
      e.push_back({"instance", "minimizer", k.minimizer});
      e.push_back({"instance", "box_lower", k.box_lower});
      e.push_back({"instance", "box_upper", k.box_upper});
      e.push_back({"instance", "l1_weight", k.l1_weight});
      break;
    case ProblemKind::kBilinearSaddle:
      e.push_back({"instance", "matrix", MatrixName(k.matrix)});
      e.push_back({"instance", "domain", DomainName(k.domain)});
      e.push_back({"instance", "simplex_pad", k.simplex_pad});
      e.push_back({"instance", "ball_radius", k.ball_radius});
      e.push_back({"instance", "spectrum_low", k.spectrum_low});
      e.push_back({"instance", "shift_norm", k.shift_norm});
      break;
    case ProblemKind::kSkewPlusGradient:
      e.push_back({"instance", "skew_norm", k.skew_norm});
      e.push_back({"instance", "curvature", k.curvature});
      e.push_back({"instance", "smooth_lipschitz", k.smooth_lipschitz});
      e.push_back({"instance", "solution_scale", k.solution_scale});
      break;
    case ProblemKind::kCustom:
      break;
  }
  e.push_back({"geometry", "kind", k.geometry.name()});
  e.push_back({"schedule", "regime", RegimeName(c.regime)});
  e.push_back({"schedule", "horizon", c.horizon});
  e.push_back({"schedule", "gamma_scale", c.gamma_scale});
  e.push_back({"schedule", "distance_guess",
               c.distance_guess ? Json(*c.distance_guess) : Json("true")});
  e.push_back({"schedule", "custom_alpha", CustomAlphaName(c.custom_alpha)});
  e.push_back({"schedule", "custom_gamma", c.custom_gamma});
  e.push_back({"schedule", "baseline_gamma", c.baseline_gamma});
  e.push_back({"noise", "kind", NoiseKindName(c.noise_kind)});
  e.push_back({"noise", "sigma_g", c.sigma_g});
  e.push_back({"noise", "sigma_h", c.sigma_h});
  e.push_back({"run", "iterations", c.iterations});
  e.push_back({"run", "replications", c.replications});
  e.push_back({"run", "base_seed", c.base_seed});
  Json baselines = Json::array();
  for (SolverKind s : c.baselines) baselines.push_back(SolverKindName(s));
  e.push_back({"run", "baselines", baselines});
  e.push_back({"run", "jobs", c.jobs});
  e.push_back({"run", "checkpoints", c.checkpoints.empty() ? Json("all") : Json(c.checkpoints)});
  e.push_back({"run", "tail_lambda", c.tail_lambda});
  if (c.slope_window) {
    e.push_back({"run", "slope_window",
                 Json::array({c.slope_window->t_begin, c.slope_window->t_end})});
  }
  e.push_back({"run", "targets", c.targets});
  e.push_back({"run", "include_timing", c.include_timing});
  e.push_back({"output", "dir", c.out_dir});
  e.push_back({"output", "format", OutputFormatName(c.format)});
  return e;
}

std::string JsonScalarToText(const std::string& key, const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_float()) return FormatDouble(v.get<double>());
  throw ConfigError("key '" + key + "' has an unsupported JSON value");
}

std::string JsonToText(const std::string& key, const Json& v) {
  if (!v.is_array()) return JsonScalarToText(key, v);
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += JsonScalarToText(key, v[i]);
  }
  return out;
}

}  // namespace

std::string SolverKindName(SolverKind kind) {
  switch (kind) {
    case SolverKind::kAmp:
      return "amp";
    case SolverKind::kMirrorProx:
      return "mirror-prox";
    case SolverKind::kExtragradient:
      return "extragradient";
  }
  return "amp";
}

SolverKind ParseSolverKind(const std::string& name) {
  if (name == "amp") return SolverKind::kAmp;
  if (name == "mirror-prox") return SolverKind::kMirrorProx;
  if (name == "extragradient") return SolverKind::kExtragradient;
  throw ConfigError("unknown solver '" + name + "'");
}

std::string OutputFormatName(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "json";
}

OutputFormat ParseOutputFormat(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ConfigError("unknown output format '" + name + "'");
}

ExperimentConfig ParseConfigText(const std::string& text) {
  ExperimentConfig config;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
      }
      section = Trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    if (section.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": key outside any section");
    }
    Apply(config, section, Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)));
  }
  return config;
}

ExperimentConfig ParseConfigJson(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("invalid JSON config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("JSON config must be an object");
  if (!doc.contains("schema_version") || doc["schema_version"] != 1) {
    throw ConfigError("JSON config needs \"schema_version\": 1");
  }
  ExperimentConfig config;
  for (const auto& [section, body] : doc.items()) {
    if (section == "schema_version") continue;
    if (!body.is_object()) {
      throw ConfigError("JSON section '" + section + "' must be an object");
    }
    for (const auto& [key, value] : body.items()) {
      Apply(config, section, key, JsonToText(key, value));
    }
  }
  return config;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const bool json = (path.size() >= 5 && path.substr(path.size() - 5) == ".json") ||
                    Trim(text).rfind('{', 0) == 0;
  return json ? ParseConfigJson(text) : ParseConfigText(text);
}

std::string ConfigToJson(const ExperimentConfig& config) {
  Json doc;
  doc["schema_version"] = 1;
  for (const Entry& e : Entries(config)) doc[e.section][e.key] = e.value;
  return doc.dump(2);
}

std::string ConfigToText(const ExperimentConfig& config) {
  std::ostringstream os;
  std::string section;
  for (const Entry& e : Entries(config)) {
    if (e.section != section) {
      if (!section.empty()) os << "\n";
      section = e.section;
      os << "[" << section << "]\n";
    }
    os << e.key << " = " << JsonToText(e.key, e.value) << "\n";
  }
  return os.str();
}

ExperimentConfig DemoConfig(ProblemKind kind) {
  ExperimentConfig c;
  c.name = "demo-" + ProblemKindName(kind);
  c.kind = kind;
  c.iterations = 200;
  switch (kind) {
    case ProblemKind::kQuadraticMin:
      c.dimension = 10;
      c.constants.spectrum_min = 0.01;
      c.constants.spectrum_max = 100.0;
      break;
    case ProblemKind::kBilinearSaddle:
      c.dimension = 10;
      c.constants.geometry = GeometrySetup::Entropy();
      break;
    case ProblemKind::kSkewPlusGradient:
      c.dimension = 8;
      c.regime = Regime::kDetUnbounded;
      c.iterations = 50;
      break;
    case ProblemKind::kCustom:
      throw ConfigError("no demo for custom instances");
  }
  c.checkpoints = {1, 2, 5, 10, 20, 50};
  if (c.iterations > 50) c.checkpoints.insert(c.checkpoints.end(), {100, c.iterations});
  return c;
}

ResolvedExperiment ResolveExperiment(const ExperimentConfig& c) {
  if (c.iterations < 1) throw ConfigError("iterations must be >= 1");
  if (c.replications < 1) throw ConfigError("replications must be >= 1");
  if (c.jobs < 1) throw ConfigError("jobs must be >= 1");
  if (!(c.sigma_g >= 0.0) || !(c.sigma_h >= 0.0)) {
    throw ConfigError("noise levels must be nonnegative");
  }
  if (!c.stochastic() && (c.sigma_g > 0.0 || c.sigma_h > 0.0)) {
    throw ConfigError("regime " + RegimeName(c.regime) + " is deterministic but noise is set");
  }

  ResolvedExperiment r;
  r.geometry = c.constants.geometry;
  try {
    r.problem = MakeInstance(c.kind, c.dimension, c.constants, c.instance_seed);
    r.start = r.problem.set.Center();
    if (r.problem.set.IsBounded()) r.omega_sq = OmegaSquared(r.geometry, r.problem.set);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (r.problem.known_solution) r.distance = (r.start - *r.problem.known_solution).norm();

  const bool unbounded = IsUnbounded(c.regime);
  if (c.regime != Regime::kCustom) {
    if (unbounded && !r.geometry.is_euclidean()) {
      throw ConfigError("unbounded regimes need the euclidean geometry");
    }
    if (!unbounded && !r.omega_sq) {
      throw ConfigError("regime " + RegimeName(c.regime) + " needs a bounded set");
    }
  } else if (!r.problem.set.IsBounded()) {
    throw ConfigError("custom schedules need a bounded set to measure the gap");
  }
  if (!c.baselines.empty() && (c.stochastic() || !r.problem.set.IsBounded())) {
    throw ConfigError("baselines run only in deterministic bounded experiments");
  }

  if (c.regime == Regime::kCustom) {
    if (!(c.custom_gamma > 0.0)) throw ConfigError("custom schedules need custom_gamma > 0");
    const double g = c.custom_gamma;
    std::function<double(int)> alpha;
    if (c.custom_alpha == CustomAlpha::kOne) {
      alpha = [](int) { return 1.0; };
    } else {
      alpha = [](int t) { return 2.0 / (t + 1.0); };
    }
    r.schedule = Schedule::Custom(alpha, [g](int) { return g; });
  } else {
    ScheduleConstants k;
    k.mu = r.geometry.mu;
    k.lipschitz_g = r.problem.lipschitz_g;
    k.lipschitz_h = r.problem.lipschitz_h;
    k.sigma_g = c.sigma_g;
    k.sigma_h = c.sigma_h;
    k.omega = r.omega_sq ? std::sqrt(*r.omega_sq) : 0.0;
    k.gamma_scale = c.gamma_scale;
    if (unbounded) {
      k.horizon = c.horizon > 0 ? c.horizon : c.iterations;
      if (!r.distance) throw ConfigError("unbounded regimes need a known solution");
    }
    if (c.regime == Regime::kStochUnbounded) {
      k.distance_guess = c.distance_guess ? *c.distance_guess : *r.distance;
    }
    r.schedule = Schedule::Make(c.regime, k);
  }
  if (r.schedule.horizon() && *r.schedule.horizon() < c.iterations) {
    throw ConfigError("schedule horizon is shorter than the iteration budget");
  }

  if (c.checkpoints.empty()) {
    for (int t = 1; t <= c.iterations; ++t) r.checkpoints.push_back(t);
  } else {
    r.checkpoints = c.checkpoints;
    std::sort(r.checkpoints.begin(), r.checkpoints.end());
    r.checkpoints.erase(std::unique(r.checkpoints.begin(), r.checkpoints.end()),
                        r.checkpoints.end());
    if (r.checkpoints.front() < 1 || r.checkpoints.back() > c.iterations) {
      throw ConfigError("checkpoints must lie in [1, iterations]");
    }
  }
  return r;
}

}  // namespace ampvi
