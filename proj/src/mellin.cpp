#include "fbessel/mellin.hpp"

#include "fbessel/errors.hpp"
#include "fbessel/specfun.hpp"

#include <cmath>
#include <sstream>

namespace fbessel {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

double mellin_transform(const TestFunction& f, double s,
                        const QuadSpec& spec) {
    spec.validate();
    const auto integrand = [&](double x) {
        return std::pow(x, s - 1.0) * f(x);
    };
    if (f.support == TestFunction::Support::Compact) {
        if (!(f.lo > 0.0))
            throw domain_error("mellin_transform: compact support must sit in (0,inf)");
        return integrate_finite_bp(integrand, f.lo, f.hi, f.breakpoints, spec)
            .value;
    }
    // Decaying support: the x^(s-1) factor is singular at 0 for s < 1, so the
    // (0,1] piece runs through the unit-interval singular integrator.
    if (!(s > 0.0))
        throw domain_error("mellin_transform: decaying functions need s > 0");
    double value = integrate_unit_singular(
        [&](double t, double) { return f(t); }, s - 1.0, 0.0, spec);
    double lo = 1.0;
    double hi = std::max(2.0, f.decay_scale);
    int quiet = 0;
    for (int k = 0; k < 60; ++k) {
        const double slab = integrate_finite(integrand, lo, hi, spec).value;
        value += slab;
        const double tol =
            0.5 * std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
        if (std::fabs(slab) <= tol) {
            if (++quiet >= 2) return value;
        } else {
            quiet = 0;
        }
        lo = hi;
        hi *= 2.0;
    }
    throw accuracy_error("mellin_transform: truncation doubling did not settle",
                         value, 0.0);
}

double mellin_symbol_ib(double s, const OperatorParams& p,
                        bool allow_negative_s) {
    if (!(s > p.nu - 1.0))
        throw domain_error("mellin_symbol_ib: requires s > nu - 1, got s = " +
                           fmt(s));
    if (!allow_negative_s && !(s > 0.0))
        throw domain_error(
            "mellin_symbol_ib: s = " + fmt(s) +
            " rejected; Gamma(s/2) poles at s in {0,-2,...} make the "
            "transform divergent there, so the accepted domain is "
            "s > max(nu-1, 0) unless negative-s probing is requested");
    const GammaRatio r({0.5 * s, 0.5 * s - 0.5 * (p.nu - 1.0)},
                       {p.alpha + 0.5 * s - 0.5 * (p.nu - 1.0),
                        p.alpha + 0.5 * s});
    return std::exp(-2.0 * p.alpha * M_LN2) * gamma_ratio_eval(r);
}

double mellin_symbol_db(double s, const OperatorParams& p) {
    // Constraint set: s/2, s/2-(nu-1)/2, s/2-alpha-(nu-1)/2 and s/2-alpha
    // must all avoid gamma poles; GammaRatio reports the offender.
    const GammaRatio r({0.5 * s, 0.5 * s - 0.5 * (p.nu - 1.0)},
                       {0.5 * s - p.alpha - 0.5 * (p.nu - 1.0),
                        0.5 * s - p.alpha});
    return std::exp(2.0 * p.alpha * M_LN2) * gamma_ratio_eval(r);
}

double symbol_semigroup_check(double s, double alpha, double beta, double nu) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw domain_error("symbol_semigroup_check: alpha, beta must be positive");
    const OperatorParams pa(alpha, nu), pb(beta, nu), pab(alpha + beta, nu);
    const double lhs =
        mellin_symbol_ib(s, pa, true) * mellin_symbol_ib(s + 2.0 * alpha, pb, true);
    return lhs / mellin_symbol_ib(s, pab, true);
}

double mellin_of_pointwise(const std::function<double(double)>& F, double s,
                           double hi, double e1, double e2, double cut,
                           const QuadSpec& spec) {
    spec.validate();
    if (!(cut > 0.0) || !(cut < 0.25 * hi))
        throw domain_error("mellin_of_pointwise: cut must sit in (0, hi/4)");
    if (!(s + e1 > 0.0) || !(s + e2 > 0.0))
        throw domain_error("mellin_of_pointwise: transform diverges at 0 "
                           "(s + leading exponent <= 0)");
    const auto integrand = [&](double x) {
        return std::pow(x, s - 1.0) * F(x);
    };
    const double body = integrate_finite(integrand, cut, hi, spec).value;

    // Two-term algebraic model A x^e1 + B x^e2 fitted at {cut, 2 cut} covers
    // the (0,cut) head; the next-order correction is O(cut^2) smaller.
    const double f1 = F(cut);
    const double f2 = F(2.0 * cut);
    double head;
    if (e1 == e2) {
        const double A = f1 / std::pow(cut, e1);
        head = A * std::pow(cut, s + e1) / (s + e1);
    } else {
        const double a11 = std::pow(cut, e1), a12 = std::pow(cut, e2);
        const double a21 = std::pow(2.0 * cut, e1), a22 = std::pow(2.0 * cut, e2);
        const double det = a11 * a22 - a12 * a21;
        const double A = (f1 * a22 - f2 * a12) / det;
        const double B = (f2 * a11 - f1 * a21) / det;
        head = A * std::pow(cut, s + e1) / (s + e1) +
               B * std::pow(cut, s + e2) / (s + e2);
    }
    return body + head;
}

double MellinSymbol::operator()(double s) const {
    return direction == Direction::Integral
               ? mellin_symbol_ib(s, params, allow_negative_s)
               : mellin_symbol_db(s, params);
}

} // namespace fbessel
