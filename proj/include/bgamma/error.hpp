#pragma once

#include <stdexcept>
#include <string>

namespace bgamma {

// Base of every error raised by the library. The CLI maps each subclass to
// its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (matrix, matroid, graph, certificate, report).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A label that is not in the ground set, or a duplicate/invalid label.
class LabelError : public Error {
 public:
  using Error::Error;
};

// A search or enumeration bound was exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Shape or index contract violated (width mismatch, index out of range).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operation precondition that is not a shape or label issue.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace bgamma
