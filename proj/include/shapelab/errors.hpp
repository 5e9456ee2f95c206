#pragma once

#include <stdexcept>
#include <string>

namespace shapelab {

// Base of every error raised by the library. The CLI maps NumericalError
// (and subclasses) to exit code 3 and everything else to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A domain description violates one of its invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A numeric argument lies outside the supported range (e.g. d = 0, q <= 0).
class DomainError : public Error {
public:
    using Error::Error;
};

// An optional field required by the requested operation is absent.
class MissingDataError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

class GeometryError : public Error {
public:
    using Error::Error;
};

class FeasibilityError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

// Raised by iterative solvers that hit max_iter before reaching tolerance.
class IterationLimitError : public NumericalError {
public:
    IterationLimitError(const std::string& what, int iterations, double last_residual)
        : NumericalError(what + " (iterations=" + std::to_string(iterations) +
                         ", residual=" + std::to_string(last_residual) + ")"),
          iterations_(iterations),
          last_residual_(last_residual) {}

    int iterations() const noexcept { return iterations_; }
    double last_residual() const noexcept { return last_residual_; }

private:
    int iterations_;
    double last_residual_;
};

}  // namespace shapelab
