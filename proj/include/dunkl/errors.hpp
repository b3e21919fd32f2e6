#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Argument outside the mathematical domain of an operation. Carries the
/// offending value so callers can report it.
class DomainError : public std::domain_error {
public:
    DomainError(const std::string& what, double value)
        : std::domain_error(what + " (value = " + std::to_string(value) + ")"), value_(value) {}

    double value() const noexcept { return value_; }

private:
    double value_;
};

/// No eigenvalue of the requested index exists for the given parameters.
class NoBoundState : public std::runtime_error {
public:
    NoBoundState(int n, int ell, double mu, const std::string& why)
        : std::runtime_error("no bound state for n=" + std::to_string(n) + ", ell=" + std::to_string(ell) +
                             ", mu=" + std::to_string(mu) + ": " + why),
          n_(n), ell_(ell), mu_(mu) {}

    int n() const noexcept { return n_; }
    int ell() const noexcept { return ell_; }
    double mu() const noexcept { return mu_; }

private:
    int n_;
    int ell_;
    double mu_;
};

/// Finite-difference oracle did not converge at the expected rate.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double order)
        : std::runtime_error(what + " (observed order = " + std::to_string(order) + ")"), order_(order) {}

    double observed_order() const noexcept { return order_; }

private:
    double order_;
};

/// Output could not be created or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dunkl
