#pragma once

#include <stdexcept>
#include <string>

namespace heatcast {

/// Invalid or inconsistent run configuration. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed, conflicting, or insufficient input data. CLI exit code 3.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure (non-finite inputs, solver breakdown). CLI exit code 4.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace heatcast
