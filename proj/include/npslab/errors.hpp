#pragma once

#include <stdexcept>
#include <string>

namespace nps {

/// Input outside the domain of an operation (cell outside shape, mu not
/// contained in lambda, malformed partition text, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exhaustive operation refused to run because it would exceed a
/// configured cutoff.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature ran out of budget before reaching the tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_(best_estimate), error_(error_estimate) {}

    double best_estimate() const noexcept { return best_; }
    double error_estimate() const noexcept { return error_; }

private:
    double best_;
    double error_;
};

/// A self-check inside a constructive routine failed.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace nps
