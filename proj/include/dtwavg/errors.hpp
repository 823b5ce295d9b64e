#pragma once

#include <stdexcept>
#include <string>

namespace dtwavg {

/// Raised when an instance exceeds a configured size limit (exponential or
/// polynomial blow-up would follow). Callers may raise the limit explicitly.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (files, rows, values).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dtwavg
