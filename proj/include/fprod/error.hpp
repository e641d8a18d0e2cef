#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fprod {

// Bad input from a caller: out-of-range parameters, malformed expressions,
// excluded parameter pairs. The CLI maps this to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical self-check failed (rank policy, lift integrality, product
// antisymmetry, certificate remainder). The CLI maps this to exit status 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public UsageError {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : UsageError("at offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        detail_(message) {}

  // Byte offset into the source text.
  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

}  // namespace fprod
