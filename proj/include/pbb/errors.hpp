#pragma once

#include <stdexcept>
#include <string>

namespace pbb {

// Error categories map 1:1 onto CLI exit codes, see tools/pbbsim.cpp.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a run drives significant population into the top Fock band.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pbb
