#pragma once

#include <stdexcept>
#include <string>

namespace korder {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside the range where the quantity is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a pole or branch point (e.g. z = 1 for unbounded k_alpha).
class SingularInputError : public Error {
public:
    using Error::Error;
};

/// A truncated series was asked for a point where truncation is meaningless.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A bracketing solver did not find the root the theory guarantees.
class SolverFailure : public Error {
public:
    using Error::Error;
};

/// A numeric evaluation hit an impossible state (zero denominator on a grid).
class EvaluationError : public Error {
public:
    using Error::Error;
};

}  // namespace korder
