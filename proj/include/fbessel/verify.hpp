#pragma once

#include <string>
#include <vector>

namespace fbessel {

/// One verification check: measured error against its pinned tolerance.
struct Check {
    std::string name;
    double error;
    double tol;
    bool pass;
};

/// Suites mirror the identity families: specfun, kernels, property1..4,
/// mellin, semigroup, derivative.
std::vector<std::string> suite_names();

/// Runs one suite; throws domain_error for an unknown name.  Checks come
/// back sorted by name.
std::vector<Check> run_suite(const std::string& suite);

} // namespace fbessel
