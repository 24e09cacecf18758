#include "fbessel/interp.hpp"

#include "fbessel/errors.hpp"

#include <algorithm>
#include <cmath>

namespace fbessel {

namespace {

constexpr int kN = SampledFunction::kNodes;

// Chebyshev-Lobatto abscissae on [-1,1], descending, and barycentric weights.
struct LobattoTables {
    std::array<double, kN> t;
    std::array<double, kN> w;
    std::array<double, 2 * (kN - 1)> probes; // off-node angles for validation
};

const LobattoTables& lobatto() {
    static const LobattoTables tab = [] {
        LobattoTables t;
        for (int k = 0; k < kN; ++k) {
            t.t[k] = std::cos(M_PI * k / (kN - 1));
            t.w[k] = (k % 2 == 0 ? 1.0 : -1.0);
        }
        t.w[0] *= 0.5;
        t.w[kN - 1] *= 0.5;
        for (int k = 0; k < kN - 1; ++k) {
            t.probes[2 * k] = std::cos(M_PI * (k + 0.37) / (kN - 1));
            t.probes[2 * k + 1] = std::cos(M_PI * (k + 0.71) / (kN - 1));
        }
        return t;
    }();
    return tab;
}

double bary_eval(const std::array<double, kN>& values, double t) {
    const LobattoTables& tab = lobatto();
    double num = 0.0, den = 0.0;
    for (int k = 0; k < kN; ++k) {
        const double d = t - tab.t[k];
        if (d == 0.0) return values[k];
        const double q = tab.w[k] / d;
        num += q * values[k];
        den += q;
    }
    return num / den;
}

} // namespace

SampledFunction SampledFunction::build(const std::function<double(double)>& fn,
                                       double lo, double hi,
                                       double rel_tol, double abs_tol,
                                       int max_depth) {
    if (!(lo < hi))
        throw domain_error("SampledFunction: requires lo < hi");
    const LobattoTables& tab = lobatto();

    // Coarse prescan sets the scale used in the acceptance test, so panels
    // over small-|f| regions are not refined to pointless relative accuracy.
    double scale = 0.0;
    for (int i = 0; i <= 48; ++i) {
        const double x = lo + (hi - lo) * i / 48.0;
        scale = std::max(scale, std::fabs(fn(x)));
    }
    const double tol = std::max(abs_tol, rel_tol * scale);

    SampledFunction sf;
    sf.lo_ = lo;
    sf.hi_ = hi;

    struct Work {
        double lo, hi;
        int depth;
    };
    std::vector<Work> stack;
    stack.push_back({lo, hi, 0});
    while (!stack.empty()) {
        const Work wk = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (wk.lo + wk.hi);
        const double half = 0.5 * (wk.hi - wk.lo);

        Panel panel;
        panel.lo = wk.lo;
        panel.hi = wk.hi;
        for (int k = 0; k < kN; ++k)
            panel.values[k] = fn(mid + half * tab.t[k]);

        double err = 0.0;
        for (double pt : tab.probes) {
            const double x = mid + half * pt;
            err = std::max(err, std::fabs(bary_eval(panel.values, pt) - fn(x)));
        }
        if (err <= tol || wk.depth >= max_depth) {
            if (err > tol)
                throw accuracy_error(
                    "SampledFunction: refinement depth exhausted", err, err);
            sf.max_err_ = std::max(sf.max_err_, err);
            sf.panels_.push_back(panel);
        } else {
            // push right first so panels come out left-to-right
            stack.push_back({mid, wk.hi, wk.depth + 1});
            stack.push_back({wk.lo, mid, wk.depth + 1});
        }
    }
    std::sort(sf.panels_.begin(), sf.panels_.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    return sf;
}

double SampledFunction::operator()(double x) const {
    if (x < lo_ || x > hi_)
        throw domain_error("SampledFunction: evaluation outside sampled range");
    auto it = std::upper_bound(
        panels_.begin(), panels_.end(), x,
        [](double v, const Panel& p) { return v < p.lo; });
    if (it != panels_.begin()) --it;
    const Panel& p = *it;
    const double t = (2.0 * x - p.lo - p.hi) / (p.hi - p.lo);
    return bary_eval(p.values, std::clamp(t, -1.0, 1.0));
}

} // namespace fbessel
