#pragma once

#include <stdexcept>
#include <string>

namespace fbessel {

/// Argument outside the mathematical domain of an operation
/// (gamma pole, hypergeometric z >= 1, y <= x, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// An adaptive scheme exhausted its budget before reaching the requested
/// tolerance.  Carries the best estimate so the caller can still use it.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double value_, double err_est_)
        : std::runtime_error(what), value(value_), err_est(err_est_) {}
    double value;
    double err_est;
};

/// A TestFunction lacks a capability (analytic derivatives of the needed
/// order) required by the requested operation.
class capability_error : public std::logic_error {
public:
    explicit capability_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace fbessel
