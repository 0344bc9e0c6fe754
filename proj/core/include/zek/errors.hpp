#pragma once

#include <stdexcept>
#include <string>

namespace zek {

/// Input text did not parse. `offset` is a byte position into the source.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A structurally well-formed value violated a domain side condition.
/// Messages name the violated rule (for link moves, the axiom) and render
/// the offending subterm.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace zek
