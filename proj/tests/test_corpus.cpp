#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fbessel/corpus.hpp"
#include "fbessel/errors.hpp"

#include "test_util.hpp"

#include <cmath>

using namespace fbessel;

namespace {

// Central finite difference of order `ord-1` data, used to cross-check each
// analytic derivative against its predecessor.
double central_diff(const TestFunction& f, double x, int ord, double h) {
    return (f.derivative(x + h, ord - 1) - f.derivative(x - h, ord - 1)) /
           (2.0 * h);
}

void check_derivative_chain(const TestFunction& f, double lo, double hi,
                            double tol) {
    for (int i = 1; i <= 10; ++i) {
        const double x = lo + (hi - lo) * i / 11.0;
        for (int ord = 1; ord <= 4; ++ord) {
            const double h = 1e-6 * std::max(1.0, std::fabs(x));
            const double fd = central_diff(f, x, ord, h);
            const double an = f.derivative(x, ord);
            const double scale =
                std::max({std::fabs(an), std::fabs(fd), 1.0});
            CHECK(std::fabs(fd - an) <= tol * scale);
        }
    }
}

} // namespace

TEST_CASE("corpus constructs and all facts hold") {
    const auto corpus = standard_corpus();
    CHECK(corpus.size() == 5);
    for (const auto& e : corpus)
        for (const auto& fact : e.facts) {
            INFO(fact.name);
            CHECK(fact.pass());
        }
}

TEST_CASE("bump derivative chain against finite differences") {
    check_derivative_chain(bump_function(), 1.05, 1.95, 1e-6);
}

TEST_CASE("ramp derivative chain against finite differences") {
    // interior plateau region plus the smooth shoulders
    check_derivative_chain(ramp_function(), 0.62, 2.9, 1e-6);
}

TEST_CASE("gaussian derivative chain against finite differences") {
    check_derivative_chain(gaussian_function(), 0.1, 2.5, 1e-6);
}

TEST_CASE("compact members are exactly zero outside their support") {
    for (const auto& e : standard_corpus()) {
        if (e.fn.support != TestFunction::Support::Compact) continue;
        for (double pad : {0.0, 1e-12, 0.3, 10.0}) {
            CHECK(e.fn(e.fn.lo - pad) == 0.0);
            CHECK(e.fn(e.fn.hi + pad) == 0.0);
        }
    }
}

TEST_CASE("gaussian analytic derivatives match the Hermite pattern") {
    const TestFunction g = gaussian_function();
    for (double x : {0.3, 1.0, 2.2}) {
        const double e = std::exp(-x * x);
        CHECK(rel_err(g.derivative(x, 1), -2 * x * e) < 1e-13);
        CHECK(rel_err(g.derivative(x, 2), (4 * x * x - 2) * e) < 1e-13);
        CHECK(rel_err(g.derivative(x, 3), (12 * x - 8 * x * x * x) * e) < 1e-12);
        CHECK(rel_err(g.derivative(x, 4),
                      (16 * std::pow(x, 4) - 48 * x * x + 12) * e) < 1e-12);
    }
}

TEST_CASE("indicator surrogate is 1 on the plateau and steep at the edges") {
    const TestFunction ind = indicator_surrogate();
    CHECK(ind(2.5) == 1.0);
    CHECK(ind(2.0005) > 0.0);
    CHECK(ind(2.0005) < 1.0);
    CHECK(ind(2.0) == 0.0);
    CHECK(ind(3.0) == 0.0);
}

TEST_CASE("power member carries its exponent") {
    const TestFunction p = power_function(-2.5);
    CHECK(rel_err(p(2.0), std::pow(2.0, -2.5)) < 1e-15);
    CHECK(rel_err(p.derivative(1.3, 1), -2.5 * std::pow(1.3, -3.5)) < 1e-13);
}

TEST_CASE("corpus_by_name resolves and rejects") {
    for (const auto& name : corpus_names())
        CHECK(corpus_by_name(name).label == name);
    CHECK_THROWS_AS(corpus_by_name("sinc"), domain_error);
}
