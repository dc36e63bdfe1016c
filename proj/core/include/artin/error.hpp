#pragma once

#include <stdexcept>

namespace artin {

// Every failure raised by the library derives from Error so callers can
// separate domain failures from programming errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text (group specs, words, matrix files, caps strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input whose parameter lies outside the accepted range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A configured search, enumeration or evaluation bound was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The operation has no model or data for the requested group.
class UnsupportedGroup : public Error {
 public:
  using Error::Error;
};

// Structurally invalid argument (e.g. a non-tree diagram passed to bipartition).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace artin
