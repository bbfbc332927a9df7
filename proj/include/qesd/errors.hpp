#pragma once

#include <stdexcept>
#include <string>

namespace qesd {

/// Bad parameters, bad usage, violated preconditions.  CLI exit code 2.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: positivity loss, unresolved event detection,
/// non-converged eigensolve.  CLI exit code 3.
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failure.  CLI exit code 4.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qesd
