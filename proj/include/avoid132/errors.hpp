#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace avoid132 {

/// Input outside the domain an operation is defined on (e.g. LDE of a
/// permutation that contains 132).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed text input. `offset()` is the 0-based character position where
/// parsing failed.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A requested size exceeds a configured enumeration or series bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace avoid132
