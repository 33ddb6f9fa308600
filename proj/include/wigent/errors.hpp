#pragma once

#include <stdexcept>
#include <string>

namespace wigent {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a type invariant (probabilities, covariance, ranges).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature could not meet its tolerance within the subdivision budget.
class QuadratureNonConvergence : public Error {
public:
    QuadratureNonConvergence(const std::string& what, double estimate, double error)
        : Error(what), estimate_(estimate), error_(error) {}
    double estimate() const noexcept { return estimate_; }
    double error() const noexcept { return error_; }

private:
    double estimate_;
    double error_;
};

/// The Wigner function takes a negative value; entropies are undefined.
class NotWignerPositive : public Error {
public:
    NotWignerPositive(const std::string& what, double min_value, double argmin_r)
        : Error(what), min_value_(min_value), argmin_r_(argmin_r) {}
    double min_value() const noexcept { return min_value_; }
    double argmin_r() const noexcept { return argmin_r_; }

private:
    double min_value_;
    double argmin_r_;
};

class NotPassive : public Error {
public:
    using Error::Error;
};

class NonSymplectic : public Error {
public:
    using Error::Error;
};

/// Photon numbers beyond the validated numeric range.
class RangeOverflow : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

class NegativeGrid : public Error {
public:
    using Error::Error;
};

/// Quantity is infinite by construction (e.g. Rényi order zero).
class Divergence : public Error {
public:
    using Error::Error;
};

}  // namespace wigent
