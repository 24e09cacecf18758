#pragma once

#include "fbessel/test_function.hpp"

#include <string>
#include <vector>

namespace fbessel {

/// A closed-form fact about a corpus function, verified at corpus
/// construction (quadrature facts by direct integration).
struct CorpusFact {
    std::string name;
    double measured;
    double expected;
    double tol;
    bool pass() const;
};

struct CorpusEntry {
    TestFunction fn;
    /// Power-function members carry their exponent; NaN otherwise.
    double power_exponent;
    /// Whether the member participates in the generic operator grids
    /// (the power member is handled by its dedicated truncated oracle).
    bool operator_grids;
    std::vector<CorpusFact> facts;
};

/// The shared corpus: smooth bump on [1,2], polynomial ramp on [0.5,3],
/// gaussian exp(-x^2) (decaying), steep indicator surrogate on [2,3]
/// (ramp width 1e-3), and a power-function member.  All facts are verified
/// during construction; a failed fact throws.
std::vector<CorpusEntry> standard_corpus();

/// Individual members, for tests that want just one.
TestFunction bump_function();              // support [1,2]
TestFunction ramp_function();              // support [0.5,3]
TestFunction gaussian_function();          // decaying
TestFunction indicator_surrogate();        // support [2,3], ramp width 1e-3
TestFunction indicator_exact(double a, double b); // raw indicator, no derivatives
TestFunction power_function(double m);     // y^m on (0,inf), decaying tag

/// Looks a corpus member up by CLI name (bump, ramp, gaussian, indicator,
/// power); throws domain_error for unknown names.
TestFunction corpus_by_name(const std::string& name);
std::vector<std::string> corpus_names();

} // namespace fbessel
