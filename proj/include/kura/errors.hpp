#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kura {

// Malformed textual input. `offset` is the byte position in the input that the
// parser was looking at when it gave up.
struct parse_error : std::runtime_error {
  std::size_t offset;
  parse_error(const std::string& msg, std::size_t offset_)
      : std::runtime_error(msg + " (byte " + std::to_string(offset_) + ")"),
        offset(offset_) {}
};

// A bounded search ran out of its budget. Callers get this instead of a wrong
// or partial answer.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A structured-configuration check failed a named hypothesis.
struct hypothesis_error : std::runtime_error {
  std::string which;
  hypothesis_error(const std::string& which_, const std::string& msg)
      : std::runtime_error(which_ + ": " + msg), which(which_) {}
};

}  // namespace kura
