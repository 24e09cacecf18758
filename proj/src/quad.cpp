#include "fbessel/quad.hpp"

#include "fbessel/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace fbessel {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double lo, hi;
    double value;
    double err;
    bool splittable;
};

Panel gk15_panel(const std::function<double(double)>& g, double lo, double hi) {
    const double centre = 0.5 * (lo + hi);
    const double hl = 0.5 * (hi - lo);

    std::array<double, 7> fv1{}, fv2{};
    const double fc = g(centre);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);
    for (int j = 0; j < 7; ++j) {
        const double dx = hl * kXgk[j];
        fv1[j] = g(centre - dx);
        fv2[j] = g(centre + dx);
        const double fsum = fv1[j] + fv2[j];
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
        if (j % 2 == 1) resg += kWg[(j - 1) / 2] * fsum;
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] *
                  (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    const double eps = std::numeric_limits<double>::epsilon();
    double err = std::fabs((resk - resg) * hl);
    resasc *= hl;
    resabs *= hl;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    err = std::max(err, 50.0 * eps * resabs);

    Panel p;
    p.lo = lo;
    p.hi = hi;
    p.value = resk * hl;
    p.err = err;
    p.splittable = (hi - lo) > 50.0 * eps * (std::fabs(lo) + std::fabs(hi) + 1.0);
    return p;
}

// ---- tanh-sinh node tables -------------------------------------------------
//
// x(u) = 1/(1+exp(-2w)), w = (pi/2) sinh u.  Nodes are cached per refinement
// level; level 0 has spacing 1, level L adds the odd multiples of 2^-L.

struct TsNode {
    double x;    // node in (0,1)
    double omx;  // 1 - x, computed without cancellation
    double lx;   // ln x
    double lomx; // ln(1-x)
    double lw;   // ln(dx/du)
};

constexpr int kTsMaxLevel = 11;
constexpr double kTsUmax = 6.56;

TsNode make_ts_node(double u) {
    const double w = 0.5 * M_PI * std::sinh(u); // u >= 0 here
    const double e = std::exp(-2.0 * w);
    TsNode n;
    n.x = 1.0 / (1.0 + e);
    n.lx = -std::log1p(e);
    n.lomx = -(2.0 * w + std::log1p(e));
    n.omx = std::exp(n.lomx);
    // dx/du = (pi/2) cosh u / (2 cosh^2 w), kept in logs past cosh overflow
    n.lw = std::log(0.5 * M_PI * std::cosh(u)) + M_LN2 - 2.0 * w -
           2.0 * std::log1p(e);
    return n;
}

const std::vector<std::vector<TsNode>>& ts_tables() {
    static const std::vector<std::vector<TsNode>> tables = [] {
        std::vector<std::vector<TsNode>> t(kTsMaxLevel + 1);
        for (int level = 0; level <= kTsMaxLevel; ++level) {
            const double h = std::ldexp(1.0, -level);
            std::vector<TsNode>& nodes = t[level];
            if (level == 0) {
                for (int k = 0; k * h <= kTsUmax; ++k)
                    nodes.push_back(make_ts_node(k * h));
            } else {
                for (int k = 1; k * h <= kTsUmax; k += 2)
                    nodes.push_back(make_ts_node(k * h));
            }
        }
        return t;
    }();
    return tables;
}

} // namespace

void QuadSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw domain_error("QuadSpec: tolerances must be positive");
    if (max_panels < 1)
        throw domain_error("QuadSpec: max_panels must be >= 1");
    if (singular_exponent && !(*singular_exponent > -1.0))
        throw domain_error("QuadSpec: singular_exponent must exceed -1");
}

QuadResult integrate_finite(const std::function<double(double)>& g,
                            double lo, double hi, const QuadSpec& spec) {
    spec.validate();
    if (lo > hi)
        throw domain_error("integrate_finite: lo > hi");
    if (lo == hi) return {0.0, 0.0};

    std::vector<Panel> panels;
    panels.reserve(64);
    panels.push_back(gk15_panel(g, lo, hi));

    for (;;) {
        double value = 0.0, err = 0.0;
        for (const Panel& p : panels) {
            value += p.value;
            err += p.err;
        }
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
        if (err <= tol) return {value, err};

        int worst = -1;
        double worst_err = -1.0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            if (panels[i].splittable && panels[i].err > worst_err) {
                worst_err = panels[i].err;
                worst = static_cast<int>(i);
            }
        }
        if (worst < 0)
            throw accuracy_error(
                "integrate_finite: tolerance unreachable (panel widths at "
                "machine precision)",
                value, err);
        if (static_cast<int>(panels.size()) >= spec.max_panels)
            throw accuracy_error("integrate_finite: panel budget (" +
                                     std::to_string(spec.max_panels) +
                                     ") exhausted",
                                 value, err);
        const Panel old = panels[worst];
        const double mid = 0.5 * (old.lo + old.hi);
        panels[worst] = gk15_panel(g, old.lo, mid);
        panels.push_back(gk15_panel(g, mid, old.hi));
    }
}

QuadResult integrate_finite_bp(const std::function<double(double)>& g,
                               double lo, double hi,
                               const std::vector<double>& breakpoints,
                               const QuadSpec& spec) {
    std::vector<double> edges{lo};
    for (double b : breakpoints)
        if (b > lo && b < hi) edges.push_back(b);
    edges.push_back(hi);
    std::sort(edges.begin(), edges.end());
    QuadResult total{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const QuadResult piece = integrate_finite(g, edges[i], edges[i + 1], spec);
        total.value += piece.value;
        total.err_est += piece.err_est;
    }
    return total;
}

double integrate_unit_singular(const std::function<double(double, double)>& g,
                               double p_exp, double q_exp,
                               const QuadSpec& spec) {
    spec.validate();
    if (!(p_exp > -1.0) || !(q_exp > -1.0))
        throw domain_error(
            "integrate_unit_singular: endpoint exponents must exceed -1");

    const auto& tables = ts_tables();
    const double term_floor = 1e-280;

    // Contribution of node u (and -u when u != 0); the weight carries the
    // endpoint factors in log space.
    const auto node_term = [&](const TsNode& n, bool mirrored) {
        const double lx = mirrored ? n.lomx : n.lx;
        const double lomx = mirrored ? n.lx : n.lomx;
        const double xv = mirrored ? n.omx : n.x;
        const double omxv = mirrored ? n.x : n.omx;
        const double lt = p_exp * lx + q_exp * lomx + n.lw;
        if (lt < -700.0) return 0.0;
        return std::exp(lt) * g(xv, omxv);
    };

    double sum = 0.0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int level = 0; level <= kTsMaxLevel; ++level) {
        const double h = std::ldexp(1.0, -level);
        const std::vector<TsNode>& nodes = tables[level];
        double add = 0.0;
        int dead = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const bool centre = (level == 0 && i == 0);
            double t = node_term(nodes[i], false);
            if (!centre) t += node_term(nodes[i], true);
            add += t;
            if (std::fabs(t) < term_floor * (std::fabs(sum + add) + 1.0)) {
                if (++dead >= 3) break;
            } else {
                dead = 0;
            }
        }
        sum += add;
        const double integral = sum * h;
        if (level >= 2) {
            const double diff = std::fabs(integral - prev);
            if (diff <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(integral)))
                return integral;
        }
        prev = integral;
    }
    throw accuracy_error("integrate_unit_singular: level budget exhausted",
                         prev, std::numeric_limits<double>::quiet_NaN());
}

} // namespace fbessel
