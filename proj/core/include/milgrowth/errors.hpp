#pragma once

#include <stdexcept>
#include <string>

namespace milgrowth {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter or input failed a precondition. Carries the dotted path of the
/// offending field ("growth.savings_rate", "schedule.entries[2].start", ...).
/// CLI exit code 1.
class ValidationError : public Error {
public:
    ValidationError(std::string field_path, const std::string& message)
        : Error(field_path.empty() ? message : field_path + ": " + message),
          field_path_(std::move(field_path)) {}

    const std::string& field_path() const noexcept { return field_path_; }

private:
    std::string field_path_;
};

/// The growth curve has no interior critical structure to optimize
/// (chi = 0 with phi <= 1: strictly decreasing, maximum pinned at m = 0).
class DegenerateCaseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Two trajectories passed to a comparison do not cover the same horizon.
class HorizonMismatchError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Inputs were valid but the computation cannot produce a result.
/// CLI exit code 2.
class ComputationError : public Error {
public:
    using Error::Error;
};

/// The goods market has no stable equilibrium: 1 - c1(1-tau) - i1 <= 0.
class InstabilityError : public ComputationError {
public:
    InstabilityError(const std::string& message, double denominator)
        : ComputationError(message), denominator_(denominator) {}

    double denominator() const noexcept { return denominator_; }

private:
    double denominator_;
};

/// Capital would drop to or below zero. `period` is the simulation period in
/// which the collapse occurs, or -1 for a single step outside a simulation.
class AnnihilationError : public ComputationError {
public:
    explicit AnnihilationError(const std::string& message, int period = -1)
        : ComputationError(message), period_(period) {}

    int period() const noexcept { return period_; }

private:
    int period_;
};

/// A calibration system is singular (zero or near-zero denominator).
class SingularityError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

} // namespace milgrowth
