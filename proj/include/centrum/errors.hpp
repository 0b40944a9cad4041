#pragma once

#include <stdexcept>
#include <string>

namespace centrum {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally malformed input (bad JSON, wrong column count, ...).
// Messages carry the 1-based line number where applicable.
struct ParseError : Error {
  using Error::Error;
};

// Input that parses but violates a semantic rule (bad year, duplicate
// publication id, empty author name, ...).
struct ValidationError : Error {
  using Error::Error;
};

// A year outside the corpus range. Messages name the valid range.
struct RangeError : Error {
  using Error::Error;
};

// Correlation requested on degenerate data (constant vector).
struct UndefinedCorrelationError : Error {
  using Error::Error;
};

}  // namespace centrum
