#pragma once

#include <stdexcept>

namespace tritile {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text, JSON or flags.
class FormatError : public Error {
 public:
  using Error::Error;
};

// An operation that needs a non-empty region received an empty one.
class EmptyRegion : public Error {
 public:
  EmptyRegion() : Error("empty region") {}
};

// The input is not a staircase surface, or a constructed object failed its
// own postcondition (fork, dead end, no section, lemma violation, ...).
class GeometryError : public Error {
 public:
  using Error::Error;
};

// A window or step budget ran out before the computation finished.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace tritile
