#pragma once

#include <stdexcept>
#include <string>

namespace domcolor {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text could not be decoded as graph6 or edge-list input.
class ParseError : public Error {
 public:
  enum class Kind {
    MalformedHeader,
    TruncatedBody,
    OutOfRangeChar,
    TrailingData,
    BadHeaderLine,
    BadLine,
    BadEndpoint,
    SelfLoop,
    DuplicateEdge,
  };

  ParseError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// An invariant was requested on a graph where it is undefined, e.g.
// dominated colorings or total domination on a graph with an isolated vertex.
class UndefinedInvariant : public Error {
 public:
  using Error::Error;
};

// The search node budget ran out before an exact answer was proven.
// This is a resource error, never a wrong value.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace domcolor
