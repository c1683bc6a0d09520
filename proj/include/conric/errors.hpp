// Conric - stabilizing cone-preserving solutions of nonsymmetric Riccati equations
// Copyright 2026 Conric Contributors
// Licensed under Apache 2.0

#pragma once

#include <stdexcept>
#include <string>

namespace conric {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not match (vector length, matrix size, cone dimension).
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A domain object could not be built (e.g. singular or ill-conditioned
/// generator matrix for a simplicial cone).
class ConstructionError : public Error {
  public:
    using Error::Error;
};

/// A stated precondition of an operation was violated by the caller.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Sylvester equation is ill-posed: an eigenvalue of D is too close to an
/// eigenvalue of -A. Carries the smallest eigenvalue-sum magnitude found.
class IllPosedError : public Error {
  public:
    IllPosedError(const std::string& what, double min_eigensum)
        : Error(what), min_eigensum_magnitude(min_eigensum) {}
    double min_eigensum_magnitude;
};

/// Two routes that must agree mathematically disagreed beyond tolerance.
class NumericalConsistencyError : public Error {
  public:
    using Error::Error;
};

/// Problem or report file violates the JSON schema.
class SchemaError : public Error {
  public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
  public:
    using Error::Error;
};

}  // namespace conric
