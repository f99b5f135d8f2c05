#pragma once

#include <stdexcept>
#include <string>

namespace inswap {

// Closure or table would exceed a configured element cap.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Potential/kernel evaluation failed (singular configuration, non-finite value).
class EvaluationError : public std::runtime_error {
public:
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

// Estimator asked for more data than the accumulator holds.
class InsufficientDataError : public std::runtime_error {
public:
  explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

// Config file failed schema validation; message carries the field path.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace inswap
