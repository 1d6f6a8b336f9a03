#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affmon {

// Malformed input: bad vectors, bad files, unknown names.  CLI exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A stated precondition of an operation was violated.  CLI exit code 3.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A bounded search ran out of candidates; not a proof of impossibility.
// CLI exit code 4.
struct search_exhausted : std::runtime_error {
  explicit search_exhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// Text parse failure with the offending position (0-based).
struct parse_error : input_error {
  std::size_t position;
  parse_error(std::size_t pos, const std::string& msg)
      : input_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace affmon
