#include "fbessel/kernels.hpp"

#include "fbessel/errors.hpp"
#include "fbessel/specfun.hpp"

#include <cmath>
#include <string>

namespace fbessel {

namespace {

void check_ordered(double x, double y) {
    if (!(x > 0.0))
        throw domain_error("kernel: x must be positive, got " +
                           std::to_string(x));
    if (!(y > x))
        throw domain_error("kernel: requires y > x");
}

double lgamma_2a(double alpha) { return std::lgamma(2.0 * alpha); }

} // namespace

OperatorParams::OperatorParams(double alpha_, double nu_)
    : alpha(alpha_), nu(nu_) {
    if (!(alpha > 0.0))
        throw domain_error("OperatorParams: alpha must be positive");
    if (!(nu >= 0.0))
        throw domain_error("OperatorParams: nu must be nonnegative");
    a = alpha + 0.5 * (nu - 1.0);
    b = alpha;
    c = 2.0 * alpha;
}

namespace {

// 2F1 factor of the kernel with the argument carried as 1-z = (x/y)^2, so
// the evaluation survives y >> x where 1-z underflows the subtraction.
double kernel_2f1(double x, double y, const OperatorParams& p) {
    const double r = x / y;
    const double eps = r * r;
    if (eps >= 0.5) {
        const double u = (y - x) * (y + x);
        return hyp2f1(p.a, p.b, p.c, u / (y * y));
    }
    return hyp2f1_one_minus(p.a, p.b, p.c, eps);
}

} // namespace

double kernel_hyp(double x, double y, const OperatorParams& p) {
    check_ordered(x, y);
    const double u = (y - x) * (y + x); // y^2 - x^2 without cancellation
    const double pref =
        std::exp((2.0 * p.alpha - 1.0) * std::log(u / (2.0 * y)) -
                 lgamma_2a(p.alpha));
    return pref * kernel_2f1(x, y, p);
}

double kernel_legendre(double x, double y, const OperatorParams& p) {
    check_ordered(x, y);
    const double u = (y - x) * (y + x);
    const double arg = 0.5 * (x / y + y / x);
    const double pref =
        std::exp(std::lgamma(p.alpha + 0.5) - lgamma_2a(p.alpha) +
                 (p.alpha - 0.5) * std::log(u) +
                 0.5 * p.nu * std::log(y / x));
    return pref * legendre_p(0.5 - p.alpha, 0.5 * p.nu - 1.0, arg);
}

double kernel_alpha1(double x, double y, double nu) {
    check_ordered(x, y);
    const double L = std::log1p((y - x) / x); // ln(y/x), exact near the diagonal
    const double d = nu - 1.0;
    if (std::fabs(d) < 1e-8) return y * L; // logarithmic limit
    if (std::fabs(d) < 1e-4) {
        // expansion of (e^(dL)-1)/d around d = 0; the closed form cancels
        const double dL = d * L;
        return y * L * (1.0 + 0.5 * dL + dL * dL / 6.0);
    }
    // (1/(nu-1)) y ((x/y)^(1-nu) - 1); expm1 keeps the bracket accurate
    return y * std::expm1(d * L) / d;
}

double kernel_nu0(double x, double y, double alpha) {
    check_ordered(x, y);
    if (!(alpha > 0.0))
        throw domain_error("kernel_nu0: alpha must be positive");
    return std::exp((2.0 * alpha - 1.0) * std::log(y - x) - lgamma_2a(alpha));
}

KernelFunctions make_kernel(KernelRep rep, const OperatorParams& p) {
    KernelFunctions k;
    switch (rep) {
    case KernelRep::Hyp:
        k.full = [p](double x, double y) { return kernel_hyp(x, y, p); };
        k.reduced = [p](double x, double y, double u) {
            (void)u;
            return std::exp((1.0 - 2.0 * p.alpha) * std::log(2.0 * y) -
                            lgamma_2a(p.alpha)) *
                   kernel_2f1(x, y, p);
        };
        break;
    case KernelRep::Legendre:
        k.full = [p](double x, double y) { return kernel_legendre(x, y, p); };
        // K / u^(2a-1) with the Legendre function unfolded through the Pfaff
        // route: the ((X+1)/(X-1))^(mu/2) prefactor absorbs the u power, and
        // the hypergeometric argument (1-X)/2 = -u^2/(4 x y (x+y)^2) stays
        // well inside the nonpositive range.
        k.reduced = [p](double x, double y, double u) {
            const double lam = 0.5 * p.nu - 1.0;
            const double zz = -u * u / (4.0 * x * y * (x + y) * (x + y));
            return std::exp((1.0 - 2.0 * p.alpha) * std::log(x + y) -
                            lgamma_2a(p.alpha) +
                            0.5 * p.nu * std::log(y / x)) *
                   hyp2f1_nonpos(-lam, lam + 1.0, p.alpha + 0.5, zz);
        };
        break;
    case KernelRep::Alpha1:
        if (p.alpha != 1.0)
            throw domain_error("make_kernel: Alpha1 representation needs alpha == 1");
        k.full = [p](double x, double y) { return kernel_alpha1(x, y, p.nu); };
        k.reduced = [p](double x, double y, double u) {
            return kernel_alpha1(x, y, p.nu) / u;
        };
        break;
    case KernelRep::Nu0:
        if (p.nu != 0.0)
            throw domain_error("make_kernel: Nu0 representation needs nu == 0");
        k.full = [p](double x, double y) { return kernel_nu0(x, y, p.alpha); };
        k.reduced = [p](double x, double y, double /*u*/) {
            return std::exp((1.0 - 2.0 * p.alpha) * std::log(x + y) -
                            lgamma_2a(p.alpha));
        };
        break;
    }
    return k;
}

} // namespace fbessel
