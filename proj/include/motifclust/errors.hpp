#pragma once

#include <stdexcept>
#include <string>

namespace motifclust {

// Error classes map 1:1 onto CLI exit codes (see tools/motifclust_cli.cpp):
// ParseError = 2, ConfigError = 3, ResourceLimitError = 4, SolverError = 5.

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace motifclust
