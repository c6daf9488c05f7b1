#pragma once

#include <stdexcept>
#include <string>

namespace zn {

/// Input outside the mathematical domain of an operation (n = 0, non-squarefree radical, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A configured size cap was exceeded (dense limit, quotient order, oracle caps).
class LimitError : public std::length_error {
public:
    explicit LimitError(const std::string& what) : std::length_error(what) {}
};

/// An iterative method failed to converge within its sweep budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace zn
