#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace godel {

/// Raised by parse() on malformed input. position() is the 1-based byte
/// offset of the offending token in the source text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Raised when an operation would enumerate or materialize more state than
/// the configured resource guard allows.
class GuardExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace godel
