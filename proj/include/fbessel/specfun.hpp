#pragma once

#include <vector>

namespace fbessel {

/// Signed product/quotient of gamma values, evaluated in log space.
/// Represents prod Gamma(numerator_args) / prod Gamma(denominator_args).
/// Construction fails if any argument sits on a gamma pole.
struct GammaRatio {
    std::vector<double> numerator_args;
    std::vector<double> denominator_args;

    GammaRatio(std::vector<double> num, std::vector<double> den);
};

struct SignedLogGamma {
    double log_magnitude;
    int sign; // +1 or -1
};

/// Gamma(x) as (log|Gamma(x)|, sign).  Negative non-integer arguments go
/// through the reflection identity Gamma(x) Gamma(1-x) = pi / sin(pi x).
SignedLogGamma ln_gamma_signed(double x);

/// Gamma(x) from the signed log representation.
double gamma_fn(double x);

/// Evaluates a GammaRatio by summing signed log-gammas (no overflow for
/// moderate argument counts).
double gamma_ratio_eval(const GammaRatio& r);

/// Gauss hypergeometric 2F1(a,b;c;z) for z in [0,1).  Series for z <= 1/2,
/// Euler integral for z > 1/2 (requires c > b > 0 there; falls back to the
/// series otherwise).
double hyp2f1(double a, double b, double c, double z);

/// 2F1(a,b;c;1-eps) with the distance to the z = 1 endpoint passed exactly,
/// so kernel evaluations stay accurate when x/y underflows the difference.
/// eps in (0,1]; the z > 1/2 branch uses the Euler integral with the
/// (1 - z t) factor assembled as (1-t) + t*eps.
double hyp2f1_one_minus(double a, double b, double c, double eps);

/// 2F1(a,b;c;z) for z <= 0 via the Pfaff transformation, which maps the
/// argument to w = z/(z-1) in [0,1).  For w > 0.9 the a<->b symmetric Pfaff
/// variant is also considered and the faster-converging series is used.
double hyp2f1_nonpos(double a, double b, double c, double z);

/// Associated Legendre function of the first kind P^mu_lam(x) for x >= 1,
/// through 2F1(-lam, lam+1; 1-mu; (1-x)/2).  x = 1 is allowed only when
/// mu <= 0.
double legendre_p(double mu, double lam, double x);

namespace detail {
/// The two hyp2f1 evaluation routes, individually addressable so the
/// cross-validation suite can run both at the same argument.
double hyp2f1_series(double a, double b, double c, double z); // |z| < 1
double hyp2f1_euler(double a, double b, double c, double z);  // c > b > 0
} // namespace detail

} // namespace fbessel
