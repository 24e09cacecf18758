#include "fbessel/corpus.hpp"

#include "fbessel/errors.hpp"
#include "fbessel/operators.hpp"
#include "fbessel/quad.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

namespace fbessel {

namespace {

// Degree-4 Taylor jet: c[k] = f^(k)/k!.  Enough arithmetic to push the
// corpus formulas through; derivatives come out as c[k]*k!.
struct Jet {
    std::array<double, 5> c{};

    static Jet constant(double v) { return Jet{{v, 0, 0, 0, 0}}; }
    static Jet variable(double x) { return Jet{{x, 1, 0, 0, 0}}; }
};

Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k < 5; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k < 5; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k < 5; ++k)
        for (int i = 0; i <= k; ++i) r.c[k] += a.c[i] * b.c[k - i];
    return r;
}

Jet operator/(const Jet& a, const Jet& b) {
    Jet r;
    r.c[0] = a.c[0] / b.c[0];
    for (int k = 1; k < 5; ++k) {
        double acc = a.c[k];
        for (int i = 0; i < k; ++i) acc -= r.c[i] * b.c[k - i];
        r.c[k] = acc / b.c[0];
    }
    return r;
}

Jet jet_exp(const Jet& a) {
    Jet r;
    r.c[0] = std::exp(a.c[0]);
    for (int k = 1; k < 5; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += j * a.c[j] * r.c[k - j];
        r.c[k] = acc / k;
    }
    return r;
}

std::array<double, 5> jet_to_derivs(const Jet& j) {
    return {j.c[0], j.c[1], 2.0 * j.c[2], 6.0 * j.c[3], 24.0 * j.c[4]};
}

// C-infinity step: 0 for t <= 0, 1 for t >= 1, B(t)/(B(t)+B(1-t)) between,
// B(t) = exp(-1/t).  Below the clamp the value is under exp(-400).
Jet smoothstep(const Jet& t) {
    constexpr double clamp = 2.5e-3;
    if (t.c[0] <= clamp) return Jet::constant(0.0);
    if (t.c[0] >= 1.0 - clamp) return Jet::constant(1.0);
    const Jet one = Jet::constant(1.0);
    const Jet bt = jet_exp(Jet::constant(0.0) - one / t);
    const Jet bo = jet_exp(Jet::constant(0.0) - one / (one - t));
    return bt / (bt + bo);
}

Jet bump_jet(double x) {
    // exp(-1/(1-u^2)) on u = 2x-3 (support [1,2])
    if (x <= 1.0 || x >= 2.0) return Jet::constant(0.0);
    const Jet u = Jet{{2.0 * x - 3.0, 2.0, 0, 0, 0}};
    const Jet w = Jet::constant(1.0) - u * u;
    if (w.c[0] <= 2.5e-3) return Jet::constant(0.0);
    return jet_exp(Jet::constant(0.0) - Jet::constant(1.0) / w);
}

Jet ramp_jet(double x) {
    if (x <= 0.5 || x >= 3.0) return Jet::constant(0.0);
    const Jet xx = Jet::variable(x);
    const Jet up = smoothstep(Jet{{(x - 0.5) / 0.35, 1.0 / 0.35, 0, 0, 0}});
    const Jet dn = smoothstep(Jet{{(3.0 - x) / 0.35, -1.0 / 0.35, 0, 0, 0}});
    return xx * xx * up * dn;
}

Jet gaussian_jet(double x) {
    return jet_exp(Jet{{-x * x, -2.0 * x, -1.0, 0, 0}});
}

Jet indicator_jet(double x) {
    constexpr double w = 1e-3;
    if (x <= 2.0 || x >= 3.0) return Jet::constant(0.0);
    const Jet up = smoothstep(Jet{{(x - 2.0) / w, 1.0 / w, 0, 0, 0}});
    const Jet dn = smoothstep(Jet{{(3.0 - x) / w, -1.0 / w, 0, 0, 0}});
    return up * dn;
}

Jet power_jet(double x, double m) {
    // Taylor coefficients of y^m at x: C(m,k) x^(m-k)
    Jet r;
    double coef = std::pow(x, m);
    double binom = 1.0;
    for (int k = 0; k < 5; ++k) {
        r.c[k] = binom * coef;
        binom *= (m - k) / (k + 1.0);
        coef /= x;
    }
    return r;
}

TestFunction from_jet(std::string label,
                      std::function<Jet(double)> jet,
                      TestFunction::Support support, double lo, double hi,
                      double decay_scale) {
    TestFunction f;
    f.label = std::move(label);
    f.support = support;
    f.lo = lo;
    f.hi = hi;
    f.decay_scale = decay_scale;
    f.eval_fn = [jet](double x) { return jet(x).c[0]; };
    f.jet_fn = [jet](double x) { return jet_to_derivs(jet(x)); };
    return f;
}

} // namespace

bool CorpusFact::pass() const { return std::fabs(measured - expected) <= tol; }

TestFunction bump_function() {
    return from_jet("bump", bump_jet, TestFunction::Support::Compact, 1.0, 2.0,
                    0.0);
}

TestFunction ramp_function() {
    return from_jet("ramp", ramp_jet, TestFunction::Support::Compact, 0.5, 3.0,
                    0.0);
}

TestFunction gaussian_function() {
    return from_jet("gaussian", gaussian_jet, TestFunction::Support::Decaying,
                    0.0, 0.0, 4.0);
}

TestFunction indicator_surrogate() {
    TestFunction f = from_jet("indicator", indicator_jet,
                              TestFunction::Support::Compact, 2.0, 3.0, 0.0);
    // the 1e-3 ramps are narrower than an initial quadrature panel
    f.breakpoints = {2.0 + 1e-3, 3.0 - 1e-3};
    return f;
}

TestFunction indicator_exact(double a, double b) {
    TestFunction f;
    f.label = "indicator_exact";
    f.support = TestFunction::Support::Compact;
    f.lo = a;
    f.hi = b;
    f.eval_fn = [](double) { return 1.0; };
    return f;
}

TestFunction power_function(double m) {
    TestFunction f = from_jet(
        "power", [m](double x) { return power_jet(x, m); },
        TestFunction::Support::Decaying, 0.0, 0.0, 8.0);
    return f;
}

std::vector<std::string> corpus_names() {
    return {"bump", "ramp", "gaussian", "indicator", "power"};
}

TestFunction corpus_by_name(const std::string& name) {
    if (name == "bump") return bump_function();
    if (name == "ramp") return ramp_function();
    if (name == "gaussian") return gaussian_function();
    if (name == "indicator") return indicator_surrogate();
    if (name == "power") return power_function(-3.0);
    throw domain_error("unknown corpus function '" + name + "'");
}

std::vector<CorpusEntry> standard_corpus() {
    std::vector<CorpusEntry> corpus;
    const QuadSpec spec;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    {
        CorpusEntry e{bump_function(), nan, true, {}};
        e.facts.push_back({"bump.center_value", e.fn(1.5), std::exp(-1.0), 1e-14});
        corpus.push_back(std::move(e));
    }
    {
        CorpusEntry e{ramp_function(), nan, true, {}};
        e.facts.push_back({"ramp.plateau_value", e.fn(1.5), 2.25, 1e-14});
        corpus.push_back(std::move(e));
    }
    {
        CorpusEntry e{gaussian_function(), nan, true, {}};
        // int_0^inf x exp(-x^2) dx = 1/2
        const double mellin2 =
            integrate_finite([&](double x) { return x * e.fn(x); }, 0.0, 12.0,
                             spec)
                .value;
        e.facts.push_back({"gaussian.mellin_s2", mellin2, 0.5, 1e-10});
        // B_nu exp(-x^2) = (4x^2-2-2nu) exp(-x^2); zero at x=1, nu=1
        e.facts.push_back(
            {"gaussian.bessel_apply_zero", bessel_apply(e.fn, 1.0, 1.0), 0.0,
             1e-12});
        corpus.push_back(std::move(e));
    }
    {
        CorpusEntry e{indicator_surrogate(), nan, true, {}};
        const double mass =
            integrate_finite_bp([&](double x) { return e.fn(x); }, 2.0, 3.0,
                                e.fn.breakpoints, spec)
                .value;
        // off by at most the two ramps of width 1e-3
        e.facts.push_back({"indicator.mass", mass, 1.0, 2e-3});
        corpus.push_back(std::move(e));
    }
    {
        CorpusEntry e{power_function(-3.0), -3.0, false, {}};
        e.facts.push_back({"power.value_at_2", e.fn(2.0), 0.125, 1e-15});
        corpus.push_back(std::move(e));
    }

    for (const CorpusEntry& e : corpus)
        for (const CorpusFact& fact : e.facts)
            if (!fact.pass())
                throw std::runtime_error("corpus fact failed: " + fact.name);
    return corpus;
}

} // namespace fbessel
