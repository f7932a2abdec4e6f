#pragma once

#include <stdexcept>

namespace reglat {

// A configured resource limit was hit (committee tuple budget, cube search
// budget, oracle size budget). Never silently truncates.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The structured solver declined an instance; the message is the diagnosis.
struct SolverRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range experiment configuration or input file.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace reglat
