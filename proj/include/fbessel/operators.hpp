#pragma once

#include "fbessel/kernels.hpp"
#include "fbessel/quad.hpp"
#include "fbessel/test_function.hpp"

namespace fbessel {

/// Integral of kernel(x,y) f(y) over y in (max(x, supp lo), supp hi), with
/// the v = (y^2-x^2)^(2 alpha) substitution on the panel adjacent to y = x;
/// 0 when x is at or beyond the support.  Decaying f goes through truncation
/// doubling.  err_est accumulates the per-piece quadrature estimates.
QuadResult integrate_kernel_against(const TestFunction& f, double x,
                                    const KernelFunctions& kernel,
                                    const OperatorParams& p,
                                    const QuadSpec& spec);

/// (IB^alpha_{nu,-} f)(x); `rep` selects the kernel representation used on
/// the smooth panels (cross-check hook), the singular panel always runs on
/// the representation's reduced form.
double frac_bessel_integral(const TestFunction& f, double x,
                            const OperatorParams& p, const QuadSpec& spec,
                            KernelRep rep = KernelRep::Hyp);

QuadResult frac_bessel_integral_err(const TestFunction& f, double x,
                                    const OperatorParams& p,
                                    const QuadSpec& spec,
                                    KernelRep rep = KernelRep::Hyp);

/// Liouville fractional integral (I_-^mu f)(x) =
/// (1/Gamma(mu)) int_x^inf (y-x)^(mu-1) f(y) dy, mu > 0.
double liouville_integral(const TestFunction& f, double x, double mu,
                          const QuadSpec& spec);

/// Saigo fractional integral J^{gamma,beta,eta} applied at x to a plain
/// function supported on [t_lo, t_hi], t_lo > x:
/// (1/Gamma(gamma)) int_x^inf (t-x)^(gamma-1) t^(-gamma-beta)
///     2F1(gamma+beta, -eta; gamma; 1-x/t) f(t) dt.
/// `breakpoints` seed panel edges at narrow features of f (t coordinates).
double saigo_integral(const std::function<double(double)>& f,
                      double t_lo, double t_hi, double x,
                      double gamma_, double beta, double eta,
                      const QuadSpec& spec,
                      const std::vector<double>& breakpoints = {});

/// Right side of the Saigo reduction: 2^(-2 alpha) J_{x^2}^{2a,(nu-1)/2-a,-a}
/// applied to t -> t^((nu-1)/2) f(sqrt t).
double saigo_reduction(const TestFunction& f, double x,
                       const OperatorParams& p, const QuadSpec& spec);

/// (B_nu g)(x) = g''(x) + (nu/x) g'(x), from the analytic derivative chain.
double bessel_apply(const TestFunction& g, double x, double nu);

/// n-fold composition B_nu^n, n in {1,2}, derived by applying the operator
/// to the derivative-carrying representation (no hardcoded coefficients).
double bessel_apply_n(const TestFunction& g, double x, double nu, int n);

/// One term of the symbolic expansion of B_nu^n: coef * x^(-inv_pow) g^(j).
struct BesselPowerTerm {
    int inv_pow;
    int deriv;
    double coef;
};

/// Expansion of B_nu^n over derivative orders, built by applying
/// D^2 + (nu/x) D to the term list n times.
std::vector<BesselPowerTerm> bessel_power_expansion(double nu, int n);

/// B_nu^n applied to a pointwise-only function via high-order central
/// finite differences (7-point stencils for n=1, 9-point for n=2),
/// Richardson-extrapolated once against step 2h.
double bessel_power_fd(const std::function<double(double)>& h, double x,
                       double nu, int n, double step);

/// (DB^alpha_{nu,-} f)(x) = B_nu^n (IB^{n-alpha} f)(x) with n = ceil(alpha)
/// (IB^0 = identity at integer alpha).  The inner function is only available
/// pointwise, so B_nu^n runs on finite differences with step
/// max(1e-4, 1e-3 x) for n = 1 and a wider step for n = 2.
double frac_bessel_derivative(const TestFunction& f, double x,
                              const OperatorParams& p, const QuadSpec& spec);

/// Closed form IB^alpha x^m = coefficient * x^(2 alpha + m), valid when
/// m + 2 alpha + nu < 1.
struct PowerCoefficient {
    double m;
    OperatorParams params;
    bool valid;
    double coefficient; // set only when valid
};

PowerCoefficient power_closed_form(double m, const OperatorParams& p);

/// Numeric oracle for the closed form: direct truncated quadrature of the
/// kernel against y^m, with the truncation radius doubled until two
/// successive values agree to spec.rel_tol.
double frac_bessel_integral_power(double m, const OperatorParams& p, double x,
                                  const QuadSpec& spec);

} // namespace fbessel
