#pragma once

#include <stdexcept>
#include <string>

namespace reso {

// Bad user-facing input (grammar violations, size mismatches). CLI exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured enumeration or state-space bound was exceeded. CLI exit code 3.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug. CLI exit code 4.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace reso
