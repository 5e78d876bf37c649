#pragma once

#include <stdexcept>
#include <string>

namespace arrpair {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched matrix/vector shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input is valid but the requested construction is not defined for it
/// (e.g. the cycle map on an arrangement with a degenerate vertex).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// Input matrix does not have the rank an operation needs.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A linear system that was required to be consistent has no solution.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rational strings, arrangement files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace arrpair
