#pragma once

#include <stdexcept>
#include <string>

namespace zc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was not met by the caller.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at (or numerically too close to) a pole.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Argument on a branch cut of a multivalued function.
class BranchError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Argument beyond the range where the chosen algorithm is valid.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A series failed to converge, or convergence could not be established.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// An iterative method did not reach its tolerance.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A user-facing parameter violates an identity's schema or constraints.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A precomputed resource (e.g. a zero table) is too small for the request.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace zc
