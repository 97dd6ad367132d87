#pragma once

#include <stdexcept>
#include <string>

namespace sphpatch {

// Numerical failures (poles, bracketing, convergence). The CLI maps these to
// exit status 3, while std::invalid_argument maps to exit status 2.
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

struct pole_error : numerical_error {
  explicit pole_error(const std::string& what) : numerical_error(what) {}
};

struct bracket_error : numerical_error {
  explicit bracket_error(const std::string& what) : numerical_error(what) {}
};

struct convergence_error : numerical_error {
  explicit convergence_error(const std::string& what) : numerical_error(what) {}
};

struct singularity_error : numerical_error {
  explicit singularity_error(const std::string& what) : numerical_error(what) {}
};

}  // namespace sphpatch
