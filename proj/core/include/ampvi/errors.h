// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef AMPVI_ERRORS_H_
#define AMPVI_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ampvi {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unsupported or inconsistent configuration (prox cell, constants, config
// files).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A mathematically undefined request, e.g. a zero coordinate under the
// entropy or a diameter of an unbounded set.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed arguments: non-finite vectors, size mismatches, empty inputs.
class InputError : public Error {
 public:
  using Error::Error;
};

// A stepsize schedule violates its regime condition.
class ScheduleError : public ConfigError {
 public:
  ScheduleError(int t, std::string condition)
      : ConfigError("schedule condition '" + condition + "' fails at t=" +
                    std::to_string(t)),
        t_(t),
        condition_(std::move(condition)) {}

  int t() const { return t_; }
  const std::string& condition() const { return condition_; }

 private:
  int t_;
  std::string condition_;
};

// Not enough samples for the requested statistic.
class StatisticsError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ampvi

#endif  // AMPVI_ERRORS_H_
