#pragma once

#include <stdexcept>
#include <string>

namespace smx {

// Base class for all kernel errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix shape with a zero row or column count.
struct ShapeError : Error {
  using Error::Error;
};

// Entry count does not match rows*cols.
struct ArityError : Error {
  using Error::Error;
};

// A set operation was applied to a matrix.
struct SortError : Error {
  using Error::Error;
};

// An axiom guard failed, e.g. union over a set with a matrix element.
struct GuardViolation : Error {
  using Error::Error;
};

// Argument outside an operation's domain, e.g. vn_ordinal(0).
struct DomainError : Error {
  using Error::Error;
};

// Universe enumeration exceeded its value cap.
struct LimitError : Error {
  using Error::Error;
};

// Formula evaluation failure (unbound variable, unknown map name).
struct EvalError : Error {
  using Error::Error;
};

// Surface-syntax parse failure with 1-based position.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
        line(line_),
        column(column_) {}
};

// JSON document does not match the value schema.
struct ValidationError : Error {
  using Error::Error;
};

// Unknown schema name or schema parameter mismatch.
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace smx
