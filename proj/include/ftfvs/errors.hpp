#pragma once

#include <stdexcept>
#include <string>

namespace ftfvs {

// Base class for all toolkit errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance text does not conform to the file format.
struct parse_error : error {
  int line;
  parse_error(int line_, const std::string& what_)
      : error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// A solver failed an internal consistency check. Always a bug.
struct internal_error : error {
  using error::error;
};

// Cooperative deadline exceeded (used by bench timeouts).
struct timeout_error : error {
  using error::error;
};

}  // namespace ftfvs
