#pragma once

#include <stdexcept>
#include <string>

namespace gibbslab {

// Usage / malformed-input errors (CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration or sampling budget exceeded (CLI exit code 2).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pivot search exhausted the window without connecting the pair.
struct NoPathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A single-site fill found no admissible symbol; falsifies an ssf assertion.
struct FillFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input claimed to be a cocycle but violated the cocycle equation.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gibbslab
