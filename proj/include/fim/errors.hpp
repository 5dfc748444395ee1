#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fim {

/// Input that violates an operation's precondition (bad rank, bad token, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Word text that could not be parsed. `position` is the 0-based offset of the
/// offending character.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A machine description that fails validation.
class ConfigError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A search exceeded its configured budget. Raised for machines whose
/// behaviour falls outside what the simulators were sized for.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fim
