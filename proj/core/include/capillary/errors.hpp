#pragma once

#include <stdexcept>
#include <string>

namespace capillary {

/// Input outside the admissible range of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative procedure stopped before reaching its tolerance. Carries the
/// best value obtained so far and its error estimate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

/// A plate inclination is not attained on the requested solution curve.
class InfeasibleConfigurationError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The inverse plate problem has no solution in the scanned parameter range.
/// The attainable separations over that range are reported.
class NoSolutionError : public DomainError {
public:
    NoSolutionError(const std::string& what, double min_separation, double max_separation)
        : DomainError(what), min_separation_(min_separation), max_separation_(max_separation) {}

    double min_separation() const noexcept { return min_separation_; }
    double max_separation() const noexcept { return max_separation_; }

private:
    double min_separation_;
    double max_separation_;
};

} // namespace capillary
