#pragma once

#include <stdexcept>
#include <string>

namespace posets {

/// Base class for every error raised by the library.
class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public PosetError {
 public:
  using PosetError::PosetError;
};

/// A relation failed the partial-order axioms.
class ValidationError : public PosetError {
 public:
  using PosetError::PosetError;
};

/// An internal consistency check failed. Seeing one of these means a bug.
class InvariantViolation : public PosetError {
 public:
  using PosetError::PosetError;
};

/// An enumeration or count ran past its configured cap.
class CapExceeded : public PosetError {
 public:
  using PosetError::PosetError;
};

/// Malformed external input (JSON documents, evaluator tables, id lists).
class ParseError : public PosetError {
 public:
  using PosetError::PosetError;
};

/// Well-formed JSON that does not describe the expected object.
class SchemaError : public PosetError {
 public:
  using PosetError::PosetError;
};

/// An evaluator changed a value it had already committed to.
class MonotonicityError : public PosetError {
 public:
  using PosetError::PosetError;
};

}  // namespace posets
