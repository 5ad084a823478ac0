#pragma once

#include <stdexcept>
#include <string>

namespace acstark {

// Input outside the domain of an operation (zero detuning, negative Γ, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Adaptive quadrature gave up before reaching the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

// ODE or propagator failure. `time` is the last time reached.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double time, std::size_t steps)
        : std::runtime_error(what), time_(time), steps_(steps) {}

    double time() const noexcept { return time_; }
    std::size_t steps() const noexcept { return steps_; }

private:
    double time_;
    std::size_t steps_;
};

// An internal cross-check between two routes to the same number failed.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace acstark
