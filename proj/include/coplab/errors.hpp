#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coplab {

// Bad caller input: out-of-range vertices, disconnected graphs, invalid parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text. `offset` is the byte offset (graph6) or the 1-based line (edge list).
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// The exact solver would need more states than its budget allows.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, unsigned long long required)
      : std::runtime_error(what), required_(required) {}
  unsigned long long required() const { return required_; }

 private:
  unsigned long long required_;
};

// A rejection-sampling generator ran out of attempts.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coplab
