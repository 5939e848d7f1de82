#pragma once

#include <stdexcept>

namespace qkt {

// Exception taxonomy mirrored by the CLI exit codes:
// usage 2, numerical integrity 3, resource cap 4.

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalIntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qkt
