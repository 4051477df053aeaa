#pragma once

#include <stdexcept>
#include <string>

namespace alextop {

// Input exceeds an enumeration/search bound. Distinct from invalid input:
// callers may catch this to skip an optional check instead of failing.
struct bound_error : std::runtime_error {
  explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

// A well-formed input hit a documented degenerate case the operation
// declines to handle (e.g. a decomposition whose premise fails).
struct edge_case_error : std::runtime_error {
  explicit edge_case_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace alextop
