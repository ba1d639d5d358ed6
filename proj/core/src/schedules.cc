// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ampvi/schedules.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ampvi/errors.h"

namespace ampvi {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRelTol = 1e-12;
constexpr int kDenseProbe = 1000;
constexpr int kMaxProbe = 1000000;

double PublishedAlpha(int t) { return 2.0 / (t + 1.0); }

// Probe points for a horizon-free schedule: every t up to 1000, then a
// logarithmic grid up to 1e6. Each probe is followed by t + 1 so the
// monotonicity check compares neighbours.
std::vector<int> HorizonFreeProbes() {
  std::vector<int> probes;
  for (int t = 1; t <= kDenseProbe; ++t) probes.push_back(t);
  for (int k = 1;; ++k) {
    const int t = static_cast<int>(std::lround(kDenseProbe * std::pow(10.0, k / 20.0)));
    if (t > kMaxProbe) break;
    probes.push_back(t);
  }
  return probes;
}

void RequireFiniteNonnegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string(name) + " must be finite and nonnegative");
  }
}

}  // namespace

double ScheduleConstants::sigma() const {
  return std::sqrt(sigma_g * sigma_g + sigma_h * sigma_h);
}

std::string RegimeName(Regime regime) {
  switch (regime) {
    case Regime::kDetBounded:
      return "det-bounded";
    case Regime::kDetUnbounded:
      return "det-unbounded";
    case Regime::kStochBounded:
      return "stoch-bounded";
    case Regime::kStochUnbounded:
      return "stoch-unbounded";
    case Regime::kCustom:
      return "custom";
  }
  return "custom";
}

Regime ParseRegime(const std::string& name) {
  for (Regime r : {Regime::kDetBounded, Regime::kDetUnbounded, Regime::kStochBounded,
                   Regime::kStochUnbounded, Regime::kCustom}) {
    if (RegimeName(r) == name) return r;
  }
  throw ConfigError("unknown regime '" + name + "'");
}

bool IsStochastic(Regime regime) {
  return regime == Regime::kStochBounded || regime == Regime::kStochUnbounded;
}

bool IsUnbounded(Regime regime) {
  return regime == Regime::kDetUnbounded || regime == Regime::kStochUnbounded;
}

Schedule Schedule::Make(Regime regime, const ScheduleConstants& k) {
  if (regime == Regime::kCustom) {
    throw ConfigError("custom schedules are built with Schedule::Custom");
  }
  if (!(k.mu > 0.0) || !std::isfinite(k.mu)) throw ConfigError("mu must be positive");
  RequireFiniteNonnegative(k.lipschitz_g, "L_G");
  RequireFiniteNonnegative(k.lipschitz_h, "L_H");
  RequireFiniteNonnegative(k.sigma_g, "sigma_G");
  RequireFiniteNonnegative(k.sigma_h, "sigma_H");
  RequireFiniteNonnegative(k.omega, "Omega");
  if (!(k.gamma_scale > 0.0) || !std::isfinite(k.gamma_scale)) {
    throw ConfigError("gamma scale must be positive");
  }

  Schedule s;
  s.regime_ = regime;
  s.constants_ = k;
  s.alpha_ = PublishedAlpha;
  const double mu = k.mu;
  const double lg = k.lipschitz_g;
  const double lh = k.lipschitz_h;
  const double sigma = k.sigma();
  const double scale = k.gamma_scale;

  if (IsUnbounded(regime)) {
    if (k.horizon < 2) throw ConfigError("unbounded regimes need a horizon N >= 2");
    s.horizon_ = k.horizon;
  }

  switch (regime) {
    case Regime::kDetBounded:
      if (lg + lh <= 0.0) throw ConfigError("det-bounded needs L_G + L_H > 0");
      s.gamma_ = [=](int t) { return scale * mu * t / (2.0 * (lg + lh * t)); };
      break;
    case Regime::kDetUnbounded: {
      const double n = k.horizon;
      if (lg + lh * n <= 0.0) throw ConfigError("det-unbounded needs L_G + L_H N > 0");
      s.c_squared_ = 2.0 / 3.0;
      s.gamma_ = [=](int t) { return scale * t / (3.0 * (lg + lh * n)); };
      break;
    }
    case Regime::kStochBounded: {
      if (sigma > 0.0 && !(k.omega > 0.0)) {
        throw ConfigError("stoch-bounded with noise needs Omega > 0");
      }
      if (lg + lh + sigma <= 0.0) {
        throw ConfigError("stoch-bounded needs a positive L_G, L_H or sigma");
      }
      s.q_ = 5.0 / 6.0;
      const double omega = k.omega;
      s.gamma_ = [=](int t) {
        const double noise =
            sigma > 0.0 ? sigma * (t + 1.0) * std::sqrt(mu * t) / (std::sqrt(2.0) * omega)
                        : 0.0;
        return scale * mu * t / (4.0 * lg + 3.0 * lh * t + noise);
      };
      break;
    }
    case Regime::kStochUnbounded: {
      if (!(k.distance_guess > 0.0) || !std::isfinite(k.distance_guess)) {
        throw ConfigError("stoch-unbounded needs a distance guess D~ > 0");
      }
      const double n = k.horizon;
      const double denom =
          5.0 * lg + 3.0 * lh * n + sigma * n * std::sqrt(n - 1.0) / k.distance_guess;
      if (denom <= 0.0) throw ConfigError("stoch-unbounded needs a positive denominator");
      s.c_squared_ = 5.0 / 12.0;
      s.q_ = 5.0 / 6.0;
      s.gamma_ = [=](int t) { return scale * t / denom; };
      break;
    }
    case Regime::kCustom:
      break;
  }
  s.Validate();
  return s;
}

Schedule Schedule::Custom(std::function<double(int)> alpha,
                          std::function<double(int)> gamma,
                          std::optional<int> horizon) {
  if (!alpha || !gamma) throw ConfigError("custom schedule needs both sequences");
  Schedule s;
  s.regime_ = Regime::kCustom;
  s.alpha_ = std::move(alpha);
  s.gamma_ = std::move(gamma);
  s.horizon_ = horizon;
  return s;
}

double Schedule::alpha(int t) const {
  if (t < 1) throw InputError("iteration index must be >= 1");
  return alpha_(t);
}

double Schedule::gamma(int t) const {
  if (t < 1) throw InputError("iteration index must be >= 1");
  return gamma_(t);
}

double Schedule::big_gamma(int t) const {
  if (t < 1) throw InputError("iteration index must be >= 1");
  if (regime_ != Regime::kCustom) return 2.0 / (t * (t + 1.0));
  return GammaSequence(alpha_, t);
}

void Schedule::Validate() const {
  if (regime_ == Regime::kCustom) return;
  const ScheduleConstants& k = constants_;
  const double mu = k.mu;
  const double lg = k.lipschitz_g;
  const double lh2 = k.lipschitz_h * k.lipschitz_h;
  const bool constant_ratio = IsUnbounded(regime_);

  std::vector<int> probes;
  if (horizon_) {
    for (int t = 1; t <= *horizon_; ++t) probes.push_back(t);
  } else {
    probes = HorizonFreeProbes();
  }

  auto ratio = [&](int t) { return alpha(t) / (big_gamma(t) * gamma(t)); };
  for (int t : probes) {
    const double a = alpha(t);
    const double g = gamma(t);
    if (t == 1 && a != 1.0) throw ScheduleError(t, "alpha_1 = 1");
    if (t > 1 && !(a >= 0.0 && a < 1.0)) throw ScheduleError(t, "0 <= alpha_t < 1");
    if (!(g > 0.0) || !std::isfinite(g)) throw ScheduleError(t, "gamma_t > 0");

    switch (regime_) {
      case Regime::kDetBounded:
        if (mu - lg * a * g - lh2 * g * g / mu < -kRelTol * mu) {
          throw ScheduleError(t, "mu - L_G alpha gamma - L_H^2 gamma^2 / mu >= 0");
        }
        break;
      case Regime::kDetUnbounded:
        if (lg * a * g + lh2 * g * g > c_squared_ * (1.0 + kRelTol)) {
          throw ScheduleError(t, "L_G alpha gamma + L_H^2 gamma^2 <= c^2");
        }
        break;
      case Regime::kStochBounded:
        if (q_ * mu - lg * a * g - 3.0 * lh2 * g * g / mu < -kRelTol * mu) {
          throw ScheduleError(t, "q mu - L_G alpha gamma - 3 L_H^2 gamma^2 / mu >= 0");
        }
        break;
      case Regime::kStochUnbounded:
        if (lg * a * g + 3.0 * lh2 * g * g > c_squared_ * (1.0 + kRelTol)) {
          throw ScheduleError(t, "L_G alpha gamma + 3 L_H^2 gamma^2 <= c^2");
        }
        break;
      case Regime::kCustom:
        break;
    }

    const bool has_next = !horizon_ || t + 1 <= *horizon_;
    if (!has_next) continue;
    const double now = ratio(t);
    const double next = ratio(t + 1);
    if (constant_ratio) {
      if (std::abs(next - now) > kRelTol * std::abs(now)) {
        throw ScheduleError(t, "alpha_t / (Gamma_t gamma_t) constant");
      }
    } else if (next < now * (1.0 - kRelTol)) {
      throw ScheduleError(t, "alpha_t / (Gamma_t gamma_t) nondecreasing");
    }
  }
}

double GammaSequence(const std::function<double(int)>& alpha, int t) {
  if (t < 1) throw InputError("Gamma_t needs t >= 1");
  double value = 1.0;
  for (int i = 2; i <= t; ++i) value *= 1.0 - alpha(i);
  return value;
}

TheoreticalBound::TheoreticalBound()
    : gap_bound(kNaN),
      gap_bound_printed(kNaN),
      v_norm_bound(kNaN),
      eps_bound(kNaN),
      v_norm_bound_printed(kNaN),
      eps_bound_printed(kNaN),
      theta(kNaN),
      q0(kNaN),
      q1(kNaN),
      c0(kNaN),
      c1(kNaN) {}

double TailProbabilityBound(double lambda) {
  return 2.0 * std::exp(-lambda * lambda / 3.0) + 3.0 * std::exp(-lambda);
}

TheoreticalBound ComputeBound(const Schedule& schedule, int t,
                              const BoundExtras& extras) {
  if (t < 1) throw InputError("bounds need t >= 1");
  const Regime regime = schedule.regime();
  if (regime == Regime::kCustom) {
    throw ConfigError("custom schedules carry no theoretical bound");
  }
  const ScheduleConstants& k = schedule.constants();
  const bool published_steps = k.gamma_scale == 1.0;
  TheoreticalBound b;
  b.regime = regime;
  b.t = t;

  const double a = schedule.alpha(t);
  const double g = schedule.gamma(t);
  const double big = schedule.big_gamma(t);
  const double mu = k.mu;
  const double lg = k.lipschitz_g;
  const double lh = k.lipschitz_h;
  const double q = schedule.q();
  const double c2 = schedule.c_squared();
  const double noise_bracket =
      4.0 * k.sigma_h * k.sigma_h + (1.0 + 1.0 / (2.0 * (1.0 - q))) * k.sigma_g * k.sigma_g;

  const bool bounded = !IsUnbounded(regime);
  if (bounded && !extras.omega_sq) {
    throw ConfigError(RegimeName(regime) + " bound needs Omega_Z^2");
  }
  if (!bounded && !extras.distance) {
    throw ConfigError(RegimeName(regime) + " bound needs the distance D");
  }

  switch (regime) {
    case Regime::kDetBounded: {
      const double om2 = *extras.omega_sq;
      b.gap_bound = a / g * om2;
      if (published_steps) {
        b.gap_bound_printed = (4.0 * lg / (mu * t * (t + 1.0)) + 4.0 * lh / (mu * t)) * om2;
      }
      break;
    }
    case Regime::kDetUnbounded: {
      const double d = *extras.distance;
      const double n = *schedule.horizon();
      double max_weight = 0.0;
      for (int i = 1; i <= t; ++i) {
        max_weight = std::max(max_weight, schedule.alpha(i) / schedule.big_gamma(i));
      }
      b.theta = big / (2.0 * (1.0 - c2)) * max_weight;
      b.v_norm_bound = 2.0 * a * d / g;
      b.eps_bound = 3.0 * a * (1.0 + b.theta) * d * d / g;
      if (published_steps) {
        b.v_norm_bound_printed = (12.0 * lg / (n * (n - 1.0)) + 12.0 * lh / (n - 1.0)) * d;
        b.eps_bound_printed = (45.0 * lg / (n * (n - 1.0)) + 45.0 * lh / (n - 1.0)) * d * d;
      }
      break;
    }
    case Regime::kStochBounded: {
      const double om2 = *extras.omega_sq;
      const double om = std::sqrt(om2);
      double step_sum = 0.0;
      double weight_sq_sum = 0.0;
      for (int i = 1; i <= t; ++i) {
        const double w = schedule.alpha(i) / schedule.big_gamma(i);
        step_sum += w * schedule.gamma(i) / mu;
        weight_sq_sum += w * w;
      }
      const double noise_part = noise_bracket * big * step_sum;
      b.q0 = 2.0 * a / g * om2 + noise_part;
      b.q1 = big * (k.sigma_g + k.sigma_h) * om * std::sqrt(2.0 / mu * weight_sq_sum) +
             noise_part;
      b.gap_bound = b.q0;
      if (published_steps && t >= 2) {
        const double noise_scale = (k.sigma_g + k.sigma_h) * om / std::sqrt(mu * (t - 1.0));
        b.c0 = 16.0 * lg * om2 / (mu * t * (t + 1.0)) + 12.0 * lh * om2 / (mu * (t + 1.0)) +
               7.0 * noise_scale;
        b.c1 = 6.0 * noise_scale;
        b.gap_bound_printed = b.c0;
      }
      break;
    }
    case Regime::kStochUnbounded: {
      const double d = *extras.distance;
      const double n = *schedule.horizon();
      double gamma_sq = 0.0;
      double gamma_cube = 0.0;
      for (int i = 1; i <= t; ++i) {
        const double gi = schedule.gamma(i);
        gamma_sq += gi * gi;
        gamma_cube += gi * gi * gi;
      }
      const double ct2 = noise_bracket * gamma_sq;
      b.theta = std::max(1.0, c2 / (q - c2));
      b.v_norm_bound = a / g * (2.0 * d + 2.0 * std::sqrt(d * d + ct2));
      b.eps_bound = a / g * ((3.0 + 6.0 * b.theta) * d * d + (1.0 + 6.0 * b.theta) * ct2) +
                    18.0 * a * a * k.sigma_h * k.sigma_h / (g * g) * gamma_cube;
      if (published_steps) {
        const double sigma = k.sigma();
        const double dt = k.distance_guess;
        const double root = std::sqrt(n - 1.0);
        b.v_norm_bound_printed = 40.0 * lg * d / (n * (n - 1.0)) + 24.0 * lh * d / (n - 1.0) +
                                 sigma * (8.0 * d / dt + 5.0) / root;
        b.eps_bound_printed =
            90.0 * lg * d * d / (n * (n - 1.0)) + 54.0 * lh * d * d / (n - 1.0) +
            sigma * d / root * (18.0 * d / dt + (19.0 + 18.0 / n) * dt / d);
      }
      break;
    }
    case Regime::kCustom:
      break;
  }
  return b;
}

}  // namespace ampvi
