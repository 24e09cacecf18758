#include "fbessel/operators.hpp"

#include "fbessel/errors.hpp"
#include "fbessel/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace fbessel {

double TestFunction::derivative(double x, int order) const {
    if (order == 0) return (*this)(x);
    if (order < 0 || order > 4)
        throw capability_error("TestFunction: derivative order " +
                               std::to_string(order) + " outside 0..4");
    if (!jet_fn)
        throw capability_error("TestFunction '" + label +
                               "' carries no derivative chain");
    if (support == Support::Compact && (x <= lo || x >= hi)) return 0.0;
    return jet_fn(x)[static_cast<std::size_t>(order)];
}

namespace {

// Integral over the panel adjacent to the y = x singularity, in the variable
// v = (y^2-x^2)^powv.  The algebraic factor u^(powv-1) and the 1/(2y) weight
// are absorbed by dv, leaving reduced(x,y,u) f(y) / (2 powv y).  Declared
// feature edges of f are mapped through the substitution.
QuadResult singular_panel(const TestFunction& f, double x, double y_hi,
                          const KernelFunctions& kernel, double powv,
                          const QuadSpec& spec) {
    const double u_hi = (y_hi - x) * (y_hi + x);
    const double v_hi = std::pow(u_hi, powv);
    const auto integrand = [&](double v) {
        const double u = std::pow(v, 1.0 / powv);
        const double y = std::sqrt(x * x + u);
        return kernel.reduced(x, y, u) * f(y) / (2.0 * powv * y);
    };
    std::vector<double> vbps;
    for (double b : f.breakpoints)
        if (b > x && b < y_hi)
            vbps.push_back(std::pow((b - x) * (b + x), powv));
    return integrate_finite_bp(integrand, 0.0, v_hi, vbps, spec);
}

QuadResult direct_panel(const TestFunction& f, double x, double lo, double hi,
                        const KernelFunctions& kernel, const QuadSpec& spec) {
    const auto integrand = [&](double y) { return kernel.full(x, y) * f(y); };
    return integrate_finite_bp(integrand, lo, hi, f.breakpoints, spec);
}

} // namespace

QuadResult integrate_kernel_against(const TestFunction& f, double x,
                                    const KernelFunctions& kernel,
                                    const OperatorParams& p,
                                    const QuadSpec& spec) {
    spec.validate();
    if (!(x > 0.0))
        throw domain_error("integrate_kernel_against: x must be positive");
    const double powv =
        spec.singular_exponent ? (*spec.singular_exponent + 1.0)
                               : 2.0 * p.alpha;

    if (f.support == TestFunction::Support::Compact) {
        if (x >= f.hi) return {0.0, 0.0};
        if (x < f.lo) return direct_panel(f, x, f.lo, f.hi, kernel, spec);
        const double y_split = std::min(f.hi, 2.0 * x);
        QuadResult r = singular_panel(f, x, y_split, kernel, powv, spec);
        if (y_split < f.hi) {
            const QuadResult tail =
                direct_panel(f, x, y_split, f.hi, kernel, spec);
            r.value += tail.value;
            r.err_est += tail.err_est;
        }
        return r;
    }

    // Decaying support: singular panel, then slabs doubled until two
    // consecutive increments are negligible.
    const double y_split = 2.0 * x;
    QuadResult r = singular_panel(f, x, y_split, kernel, powv, spec);
    double lo = y_split;
    double hi = std::max(2.0 * y_split, x + f.decay_scale);
    int quiet = 0;
    double last_slab = 0.0, prev_slab = 0.0;
    for (int k = 0; k < 60; ++k) {
        const QuadResult slab = direct_panel(f, x, lo, hi, kernel, spec);
        r.value += slab.value;
        r.err_est += slab.err_est;
        prev_slab = last_slab;
        last_slab = std::fabs(slab.value);
        const double tol =
            0.5 * std::max(spec.abs_tol, spec.rel_tol * std::fabs(r.value));
        if (last_slab <= tol) {
            if (++quiet >= 2) {
                // the discarded tail is bounded by the final geometric slabs
                r.err_est += 2.0 * (last_slab + prev_slab);
                return r;
            }
        } else {
            quiet = 0;
        }
        lo = hi;
        hi *= 2.0;
    }
    throw accuracy_error(
        "integrate_kernel_against: truncation doubling did not settle",
        r.value, r.err_est);
}

QuadResult frac_bessel_integral_err(const TestFunction& f, double x,
                                    const OperatorParams& p,
                                    const QuadSpec& spec, KernelRep rep) {
    return integrate_kernel_against(f, x, make_kernel(rep, p), p, spec);
}

double frac_bessel_integral(const TestFunction& f, double x,
                            const OperatorParams& p, const QuadSpec& spec,
                            KernelRep rep) {
    return frac_bessel_integral_err(f, x, p, spec, rep).value;
}

double liouville_integral(const TestFunction& f, double x, double mu,
                          const QuadSpec& spec) {
    spec.validate();
    if (!(mu > 0.0))
        throw domain_error("liouville_integral: mu must be positive");
    const double inv_gamma = std::exp(-std::lgamma(mu));

    // Singular piece on [x, y_hi] in the variable v = (y-x)^mu.
    const auto singular = [&](double y_hi) {
        const double v_hi = std::pow(y_hi - x, mu);
        const auto integrand = [&](double v) {
            const double y = x + std::pow(v, 1.0 / mu);
            return f(y) / mu;
        };
        std::vector<double> vbps;
        for (double b : f.breakpoints)
            if (b > x && b < y_hi) vbps.push_back(std::pow(b - x, mu));
        return integrate_finite_bp(integrand, 0.0, v_hi, vbps, spec);
    };
    const auto direct = [&](double lo, double hi) {
        const auto integrand = [&](double y) {
            return std::pow(y - x, mu - 1.0) * f(y);
        };
        return integrate_finite_bp(integrand, lo, hi, f.breakpoints, spec);
    };

    if (f.support == TestFunction::Support::Compact) {
        if (x >= f.hi) return 0.0;
        if (x < f.lo) return inv_gamma * direct(f.lo, f.hi).value;
        const double y_split = std::min(f.hi, x + 0.5 * (f.hi - x));
        double value = singular(y_split).value;
        if (y_split < f.hi) value += direct(y_split, f.hi).value;
        return inv_gamma * value;
    }

    const double y_split = x + 1.0;
    double value = singular(y_split).value;
    double lo = y_split;
    double hi = std::max(2.0 * y_split, x + f.decay_scale);
    int quiet = 0;
    for (int k = 0; k < 60; ++k) {
        const double slab = direct(lo, hi).value;
        value += slab;
        const double tol =
            0.5 * std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
        if (std::fabs(slab) <= tol) {
            if (++quiet >= 2) return inv_gamma * value;
        } else {
            quiet = 0;
        }
        lo = hi;
        hi *= 2.0;
    }
    throw accuracy_error("liouville_integral: truncation doubling did not settle",
                         inv_gamma * value, 0.0);
}

double saigo_integral(const std::function<double(double)>& f,
                      double t_lo, double t_hi, double x,
                      double gamma_, double beta, double eta,
                      const QuadSpec& spec,
                      const std::vector<double>& breakpoints) {
    spec.validate();
    if (!(gamma_ > 0.0))
        throw domain_error("saigo_integral: gamma must be positive");
    if (!(x > 0.0))
        throw domain_error("saigo_integral: x must be positive");
    if (x >= t_hi) return 0.0;

    // t^(-gamma-beta) 2F1(gamma+beta, -eta; gamma; 1-x/t) f(t); the
    // hypergeometric argument is carried as 1-z = x/t.
    const auto weight = [&](double t) {
        const double eps = x / t;
        double F;
        if (eps >= 0.5)
            F = hyp2f1(gamma_ + beta, -eta, gamma_, (t - x) / t);
        else
            F = hyp2f1_one_minus(gamma_ + beta, -eta, gamma_, eps);
        return std::pow(t, -gamma_ - beta) * F * f(t);
    };

    const double inv_gamma = std::exp(-std::lgamma(gamma_));
    const double lo = std::max(x, t_lo);
    if (lo > x) {
        const auto integrand = [&](double t) {
            return std::pow(t - x, gamma_ - 1.0) * weight(t);
        };
        return inv_gamma *
               integrate_finite_bp(integrand, lo, t_hi, breakpoints, spec).value;
    }
    const double t_split = std::min(t_hi, 2.0 * x);
    const double v_hi = std::pow(t_split - x, gamma_);
    const auto transformed = [&](double v) {
        const double t = x + std::pow(v, 1.0 / gamma_);
        return weight(t) / gamma_;
    };
    std::vector<double> vbps;
    for (double b : breakpoints)
        if (b > x && b < t_split) vbps.push_back(std::pow(b - x, gamma_));
    double value = integrate_finite_bp(transformed, 0.0, v_hi, vbps, spec).value;
    if (t_split < t_hi) {
        const auto integrand = [&](double t) {
            return std::pow(t - x, gamma_ - 1.0) * weight(t);
        };
        value +=
            integrate_finite_bp(integrand, t_split, t_hi, breakpoints, spec).value;
    }
    return inv_gamma * value;
}

double saigo_reduction(const TestFunction& f, double x,
                       const OperatorParams& p, const QuadSpec& spec) {
    if (!(x > 0.0))
        throw domain_error("saigo_reduction: x must be positive");
    const double half_nu_m1 = 0.5 * (p.nu - 1.0);
    const auto phi = [&f, half_nu_m1](double t) {
        return std::pow(t, half_nu_m1) * f(std::sqrt(t));
    };
    double t_lo, t_hi;
    if (f.support == TestFunction::Support::Compact) {
        t_lo = f.lo * f.lo;
        t_hi = f.hi * f.hi;
    } else {
        t_lo = 0.0;
        const double y_max = x + 4.0 * f.decay_scale;
        t_hi = y_max * y_max;
    }
    std::vector<double> tbps;
    for (double b : f.breakpoints) tbps.push_back(b * b);
    const double value =
        saigo_integral(phi, t_lo, t_hi, x * x, 2.0 * p.alpha,
                       half_nu_m1 - p.alpha, -p.alpha, spec, tbps);
    return std::exp(-2.0 * p.alpha * M_LN2) * value;
}

double bessel_apply(const TestFunction& g, double x, double nu) {
    if (!(x > 0.0))
        throw domain_error("bessel_apply: x must be positive");
    return g.derivative(x, 2) + (nu / x) * g.derivative(x, 1);
}

std::vector<BesselPowerTerm> bessel_power_expansion(double nu, int n) {
    if (n < 1)
        throw domain_error("bessel_power_expansion: n must be >= 1");
    // terms keyed by (inverse power of x, derivative order)
    std::map<std::pair<int, int>, double> terms{{{0, 0}, 1.0}};
    for (int step = 0; step < n; ++step) {
        std::map<std::pair<int, int>, double> next;
        for (const auto& [key, c] : terms) {
            const auto [p, j] = key;
            // D^2: p(p+1) x^(-p-2) g^(j) - 2p x^(-p-1) g^(j+1) + x^(-p) g^(j+2)
            // (nu/x) D: -nu p x^(-p-2) g^(j) + nu x^(-p-1) g^(j+1)
            next[{p + 2, j}] += c * (p * (p + 1.0) - nu * p);
            next[{p + 1, j + 1}] += c * (nu - 2.0 * p);
            next[{p, j + 2}] += c;
        }
        terms = std::move(next);
    }
    std::vector<BesselPowerTerm> out;
    for (const auto& [key, c] : terms)
        if (c != 0.0) out.push_back({key.first, key.second, c});
    return out;
}

double bessel_apply_n(const TestFunction& g, double x, double nu, int n) {
    if (!(x > 0.0))
        throw domain_error("bessel_apply_n: x must be positive");
    if (n == 1) return bessel_apply(g, x, nu);
    if (n != 2)
        throw capability_error(
            "bessel_apply_n: derivative chains stop at order 4 (n <= 2)");
    double sum = 0.0;
    for (const BesselPowerTerm& t : bessel_power_expansion(nu, n))
        sum += t.coef * std::pow(x, -t.inv_pow) * g.derivative(x, t.deriv);
    return sum;
}

namespace {

// Finite-difference weights on the integer offsets in `grid` for the m-th
// derivative at 0 (Fornberg's recursion), in units of the step.
std::vector<double> fd_weights(int m, const std::vector<double>& grid) {
    const int nd = static_cast<int>(grid.size());
    std::vector<std::vector<std::vector<double>>> d(
        static_cast<std::size_t>(m + 1),
        std::vector<std::vector<double>>(grid.size(),
                                         std::vector<double>(grid.size(), 0.0)));
    d[0][0][0] = 1.0;
    double c1 = 1.0;
    for (int i = 1; i < nd; ++i) {
        double c2 = 1.0;
        for (int j = 0; j < i; ++j) {
            const double c3 = grid[i] - grid[j];
            c2 *= c3;
            for (int k = std::min(i, m); k >= 0; --k) {
                const double prev = d[k][i - 1][j];
                const double below = (k > 0) ? d[k - 1][i - 1][j] : 0.0;
                d[k][i][j] = (grid[i] * prev - k * below) / c3;
            }
        }
        for (int k = std::min(i, m); k >= 0; --k) {
            const double prev = d[k][i - 1][i - 1];
            const double below = (k > 0) ? d[k - 1][i - 1][i - 1] : 0.0;
            d[k][i][i] = c1 / c2 * (k * below - grid[i - 1] * prev);
        }
        c1 = c2;
    }
    std::vector<double> w(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) w[j] = d[m][nd - 1][j];
    return w;
}

} // namespace

double bessel_power_fd(const std::function<double(double)>& h, double x,
                       double nu, int n, double step) {
    if (n != 1 && n != 2)
        throw domain_error("bessel_power_fd: n must be 1 or 2");
    if (!(step > 0.0))
        throw domain_error("bessel_power_fd: step must be positive");
    const int r = (n == 1) ? 3 : 4; // stencil half-width
    if (!(x - 2.0 * r * step > 0.0))
        throw domain_error("bessel_power_fd: x too close to 0 for step " +
                           std::to_string(step));

    // One evaluation per needed offset (the step-2h stencil reuses the even
    // offsets of the step-h stencil where they overlap).
    std::map<int, double> values;
    for (int k = -r; k <= r; ++k) values[k] = 0.0;
    for (int k = -r; k <= r; ++k) values[2 * k] = 0.0;
    for (auto& [k, v] : values) v = h(x + k * step);

    std::vector<double> grid(2 * static_cast<std::size_t>(r) + 1);
    for (int k = -r; k <= r; ++k) grid[static_cast<std::size_t>(k + r)] = k;

    const auto stencil = [&](int m, double hstep, int mult) {
        const std::vector<double> w = fd_weights(m, grid);
        double sum = 0.0;
        for (int k = -r; k <= r; ++k)
            sum += w[static_cast<std::size_t>(k + r)] * values.at(mult * k);
        return sum / std::pow(hstep, m);
    };

    double result = 0.0;
    for (const BesselPowerTerm& t : bessel_power_expansion(nu, n)) {
        double dj;
        if (t.deriv == 0) {
            dj = values.at(0);
        } else {
            const double d1 = stencil(t.deriv, step, 1);
            const double d2 = stencil(t.deriv, 2.0 * step, 2);
            const int npts = 2 * r + 1;
            const int acc = 2 * ((npts + 1 - t.deriv) / 2); // central-parity order
            const double f = std::pow(2.0, acc);
            dj = (f * d1 - d2) / (f - 1.0);
        }
        result += t.coef * std::pow(x, -t.inv_pow) * dj;
    }
    return result;
}

double frac_bessel_derivative(const TestFunction& f, double x,
                              const OperatorParams& p, const QuadSpec& spec) {
    if (!(x > 0.0))
        throw domain_error("frac_bessel_derivative: x must be positive");
    const double a = p.alpha;
    const int n = static_cast<int>(std::ceil(a));
    const double inner = n - a; // order of the inner integral; 0 at integer a
    if (n > 2)
        throw capability_error(
            "frac_bessel_derivative: alpha > 2 needs derivative order > 4");

    QuadSpec tight = spec;
    tight.rel_tol = std::min(spec.rel_tol, 1e-12);
    tight.abs_tol = std::min(spec.abs_tol, 1e-14);

    std::function<double(double)> h;
    if (inner == 0.0) {
        h = [&f](double t) { return f(t); };
    } else {
        const OperatorParams ip(inner, p.nu);
        h = [&f, ip, tight](double t) {
            return frac_bessel_integral(f, t, ip, tight);
        };
    }
    const double step = (n == 1) ? std::max(1e-4, 1e-3 * x)
                                 : 0.02 * std::max(1.0, x);
    return bessel_power_fd(h, x, p.nu, n, step);
}

PowerCoefficient power_closed_form(double m, const OperatorParams& p) {
    PowerCoefficient out{m, p, false,
                         std::numeric_limits<double>::quiet_NaN()};
    if (!(m + 2.0 * p.alpha + p.nu < 1.0)) return out;
    const GammaRatio r({-p.alpha - 0.5 * m,
                        -0.5 * (p.nu - 1.0) - p.alpha - 0.5 * m},
                       {0.5 * (1.0 - p.nu - m), -0.5 * m});
    out.valid = true;
    out.coefficient =
        std::exp(-2.0 * p.alpha * M_LN2) * gamma_ratio_eval(r);
    return out;
}

double frac_bessel_integral_power(double m, const OperatorParams& p, double x,
                                  const QuadSpec& spec) {
    spec.validate();
    if (!(x > 0.0))
        throw domain_error("frac_bessel_integral_power: x must be positive");
    // Absolute convergence of the defining integral needs both conditions;
    // the closed form's m + 2 alpha + nu < 1 alone leaves a divergent tail.
    if (!(m + 2.0 * p.alpha < 0.0) || !(m + 2.0 * p.alpha + p.nu < 1.0))
        throw domain_error(
            "frac_bessel_integral_power: integral diverges for these (m,alpha,nu)");

    const KernelFunctions kernel = make_kernel(KernelRep::Hyp, p);
    TestFunction f;
    f.label = "power";
    f.support = TestFunction::Support::Decaying;
    f.eval_fn = [m](double y) { return std::pow(y, m); };

    const double y_split = 2.0 * x;
    const double powv = 2.0 * p.alpha;
    QuadResult r = singular_panel(f, x, y_split, kernel, powv, spec);
    double lo = y_split;
    double hi = 2.0 * y_split;
    int quiet = 0;
    for (int k = 0; k < 60; ++k) {
        const QuadResult slab = direct_panel(f, x, lo, hi, kernel, spec);
        r.value += slab.value;
        const double tol =
            0.5 * std::max(spec.abs_tol, spec.rel_tol * std::fabs(r.value));
        if (std::fabs(slab.value) <= tol) {
            if (++quiet >= 2) return r.value;
        } else {
            quiet = 0;
        }
        lo = hi;
        hi *= 2.0;
    }
    throw accuracy_error(
        "frac_bessel_integral_power: truncation doubling did not settle",
        r.value, r.err_est);
}

} // namespace fbessel
