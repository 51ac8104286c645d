#pragma once

#include <stdexcept>
#include <string>

namespace zf {

/// Malformed or inconsistent input (CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configuration outside the supported cases (exit code 3).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A verification that could not be carried out or failed hard (exit code 1).
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zf
