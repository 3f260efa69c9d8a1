#pragma once

#include <stdexcept>
#include <string>

namespace polysect {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for its input.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// The flat handed to a section sampler does not meet the body's interior.
class FlatMissesInterior : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

/// Vertex enumeration was asked for an unbounded halfspace intersection.
class UnboundedPolyhedron : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

/// Malformed text input (OFF files, body specs, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace polysect
