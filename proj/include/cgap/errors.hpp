#pragma once

#include <stdexcept>
#include <string>

namespace cgap {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller passed arguments outside an operation's documented domain.
struct PreconditionError : Error {
  using Error::Error;
};

// Input point set has affine dimension below the ambient dimension, or a
// geometric primitive collapsed (zero volume, empty intersection, ...).
struct DegenerateInput : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ZeroDirection : Error {
  using Error::Error;
};

struct SingularMap : Error {
  using Error::Error;
};

struct SamplingFailure : Error {
  using Error::Error;
};

struct UnsupportedDimension : Error {
  using Error::Error;
};

struct ConvergenceFailure : Error {
  using Error::Error;
};

struct InvalidSpec : Error {
  using Error::Error;
};

// Constructed body's centroid-gap direction is not the one the construction
// promises (up to tolerance).
struct DirectionMismatch : Error {
  using Error::Error;
};

// Malformed input document: missing field, wrong type, ragged vertex list.
// Message carries the offending field's path.
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace cgap
