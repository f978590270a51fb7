#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace twistsum {

/// Base class for every computational failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's domain (bad sizes, negative weights, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class OrderMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A twist factor e^{a j} equals 1, so a generating-function denominator vanishes at z = 0.
class SingularTwist : public DomainError {
public:
    using DomainError::DomainError;
};

/// Series acceleration stopped before reaching the requested tolerance.
class AccelerationFailure : public Error {
public:
    AccelerationFailure(const std::string& what, std::complex<double> best, double achieved)
        : Error(what), best_estimate(best), achieved_tolerance(achieved) {}

    std::complex<double> best_estimate;
    double achieved_tolerance;
};

} // namespace twistsum
