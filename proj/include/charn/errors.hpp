#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charn {

/// Base class for all library errors.
class CharnError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All kernel weights vanished at an evaluation point (point lies outside
/// the data range of a compactly supported kernel, or the weights
/// underflowed to zero).
class EmptyNeighborhood : public CharnError {
public:
    explicit EmptyNeighborhood(double x)
        : CharnError("empty kernel neighborhood at x = " + std::to_string(x)), x_(x) {}
    double at() const noexcept { return x_; }

private:
    double x_;
};

/// The weight function assigned total mass zero to the lagged observations.
class DegenerateWeights : public CharnError {
public:
    DegenerateWeights() : CharnError("weight function is zero at every lagged observation") {}
};

/// A required conditional variance estimate was <= 0 at a point that
/// carries positive weight.
class NonpositiveVariance : public CharnError {
public:
    NonpositiveVariance(std::size_t index, double value)
        : CharnError("nonpositive variance estimate " + std::to_string(value) +
                     " at residual index " + std::to_string(index)),
          index_(index) {}
    explicit NonpositiveVariance(const std::string& what) : CharnError(what), index_(0) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// All parametric residuals are identical; no standardization possible.
class ZeroVariance : public CharnError {
public:
    ZeroVariance() : CharnError("all parametric residuals are identical") {}
};

/// A denominator that must be nonzero evaluated to zero.
class ZeroDenominator : public CharnError {
public:
    using CharnError::CharnError;
};

/// tau^2 = s8/s4^2 - 1 fell below the configured floor; the multiplicative
/// test's normalization is singular and the test is inapplicable.
class DegenerateTau : public CharnError {
public:
    explicit DegenerateTau(double tau2)
        : CharnError("multiplicative test inapplicable: tau^2 = " + std::to_string(tau2) +
                     " (volatility estimate is numerically constant)"),
          tau2_(tau2) {}
    double tau2() const noexcept { return tau2_; }

private:
    double tau2_;
};

/// The simulated chain left the finite range (explosive specification).
class SimulationError : public CharnError {
public:
    SimulationError(std::size_t step, const std::string& what)
        : CharnError("simulation diverged at step " + std::to_string(step) + ": " + what),
          step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Requested significance level is not in the critical-value table.
class UntabulatedAlpha : public CharnError {
public:
    explicit UntabulatedAlpha(double alpha)
        : CharnError("alpha = " + std::to_string(alpha) +
                     " is not tabulated (pass interpolate to allow approximation)") {}
};

/// Input file could not be parsed as a series.
class ParseError : public CharnError {
public:
    ParseError(std::size_t line, const std::string& what)
        : CharnError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace charn
