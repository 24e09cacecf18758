#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace fbessel {

/// Tolerances and budget for one quadrature call.
struct QuadSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_panels = 4096;
    /// Algebraic exponent of the integrand at the lower endpoint, when the
    /// caller wants to override the one derived from operator parameters.
    std::optional<double> singular_exponent;

    void validate() const; // throws domain_error on bad fields
};

struct QuadResult {
    double value;
    double err_est;
};

/// Globally adaptive bisection with a fixed 15-point Gauss-Kronrod rule per
/// panel.  Converged when err_est <= max(abs_tol, rel_tol*|value|); throws
/// accuracy_error (carrying the best estimate) when the panel budget runs out.
QuadResult integrate_finite(const std::function<double(double)>& g,
                            double lo, double hi, const QuadSpec& spec);

/// integrate_finite with panel boundaries seeded at the breakpoints falling
/// inside (lo, hi), so features narrower than an initial panel are not
/// invisible to the error estimator.
QuadResult integrate_finite_bp(const std::function<double(double)>& g,
                               double lo, double hi,
                               const std::vector<double>& breakpoints,
                               const QuadSpec& spec);

/// Integral over (0,1) of t^p_exp (1-t)^q_exp g(t, 1-t), p_exp, q_exp > -1,
/// via a tanh-sinh (double exponential) change of variable.  The endpoint
/// factors are applied in log space, so algebraic singularities cost
/// nothing; g receives 1-t as a separately-computed exact argument.
double integrate_unit_singular(const std::function<double(double, double)>& g,
                               double p_exp, double q_exp,
                               const QuadSpec& spec);

} // namespace fbessel
