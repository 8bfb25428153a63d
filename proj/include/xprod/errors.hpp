#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xprod {

// A mathematical precondition does not hold (inverting zero, n = 0 for Per^n, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Operands do not fit together (length mismatch, different systems).
class StructuralError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A caller-side contract on the arguments was violated.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Literal or file input could not be parsed. `offset` is the byte position
// in the source text, or npos when not applicable.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset = std::string::npos)
      : std::runtime_error(offset == std::string::npos
                               ? what
                               : what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// Literal parsed fine but refers to something that does not exist (e.g. e7 on 3 points).
class SemanticError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace xprod
