#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdorg {

/// Malformed graph or representation text. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called on input outside its contract (twins, wrong sides, non-2DORG, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds the size bound of an exhaustive routine.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An internal cross-check disagreed. On valid input this signals a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The independence graph admits no transitive orientation.
class NotComparability : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tdorg
