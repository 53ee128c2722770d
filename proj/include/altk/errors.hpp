#pragma once

#include <stdexcept>
#include <string>

namespace altk {

// Malformed input text; position is a byte offset into the input when known.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg, std::size_t position = 0)
      : std::runtime_error(msg), position(position) {}
  std::size_t position;
};

// Structurally invalid data (bad arc labels, non-planar code, ...).
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input is valid but outside an operation's domain (split diagram, ...).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace altk
