#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jonesmod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is the 0-based byte offset of the
/// offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live over different coefficient rings, or an operation was
/// handed a polynomial over the wrong ring.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid diagram (label invariant, links, non-integral Jones exponents).
class DiagramError : public Error {
 public:
  using Error::Error;
};

/// Knot table ingestion or lookup failure.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A classification precondition failed, or an internal cross-check did.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace jonesmod
