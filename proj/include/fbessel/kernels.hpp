#pragma once

#include <functional>

namespace fbessel {

/// The pair (alpha, nu) parametrizing the fractional Bessel integral and
/// derivative on the semiaxis.  Caches the hypergeometric parameters of the
/// kernel: a = alpha + (nu-1)/2, b = alpha, c = 2 alpha.
struct OperatorParams {
    double alpha;
    double nu;
    double a, b, c;

    OperatorParams(double alpha_, double nu_);
};

/// Hypergeometric form of the kernel:
///   (1/Gamma(2a)) ((y^2-x^2)/(2y))^(2a-1) 2F1(a+(nu-1)/2, a; 2a; 1-x^2/y^2).
double kernel_hyp(double x, double y, const OperatorParams& p);

/// Legendre form of the same kernel:
///   (Gamma(a+1/2)/Gamma(2a)) (y^2-x^2)^(a-1/2) (y/x)^(nu/2)
///     P^{1/2-a}_{nu/2-1}((x/y + y/x)/2).
double kernel_legendre(double x, double y, const OperatorParams& p);

/// Closed form at alpha = 1: (1/(nu-1)) y ((x/y)^(1-nu) - 1), with the
/// logarithmic limit y ln(y/x) at nu = 1 and a series expansion in the
/// cancellation-prone band around it.
double kernel_alpha1(double x, double y, double nu);

/// Liouville specialization at nu = 0: (y-x)^(2a-1) / Gamma(2a).
double kernel_nu0(double x, double y, double alpha);

/// A kernel packaged for the integration layer.  `full` is K(x,y); `reduced`
/// is K(x,y) / u^(2a-1) with u = y^2 - x^2, written so it stays finite and
/// cancellation-free as y -> x (used on the singular panel after the
/// v = u^(2a) substitution).
struct KernelFunctions {
    std::function<double(double x, double y)> full;
    std::function<double(double x, double y, double u)> reduced;
};

enum class KernelRep { Hyp, Legendre, Alpha1, Nu0 };

KernelFunctions make_kernel(KernelRep rep, const OperatorParams& p);

} // namespace fbessel
