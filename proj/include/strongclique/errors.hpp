#pragma once

#include <stdexcept>

namespace strongclique {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range vertex, bad parameters, non-clique where a
/// clique is required.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a desk-scale cap (vertex count, group order, solver size).
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation was called on a graph outside its stated hypothesis.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two independent decision routes returned different answers. Always a bug.
class MethodMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace strongclique
