#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fbessel/corpus.hpp"
#include "fbessel/errors.hpp"
#include "fbessel/operators.hpp"
#include "fbessel/specfun.hpp"

#include "test_util.hpp"

#include <cmath>

using namespace fbessel;

namespace {
const QuadSpec kSpec;

// frozen 25-digit reference: 2^(-1/2) G(5/4)/G(7/4)
constexpr double kPowerCoefRef = 0.6973664133687344326347747;
} // namespace

TEST_CASE("operator values against frozen high-precision references") {
    // end-to-end anchors computed beforehand with 30-digit arithmetic
    const TestFunction f = bump_function();
    struct Ref {
        double alpha, nu, x, value;
    };
    const Ref refs[] = {
        {0.5, 0.0, 0.7, 0.22199690808403971891},
        {0.75, 2.0, 1.3, 0.12325811987898005004},
        {1.7, 3.5, 0.4, 1.4649566805058391585},
        {0.25, 1.0, 1.5, 0.23157413177490467404},
    };
    for (const Ref& r : refs) {
        const double got =
            frac_bessel_integral(f, r.x, OperatorParams(r.alpha, r.nu), kSpec);
        CHECK(rel_err(got, r.value) < 1e-10);
    }
    CHECK(rel_err(liouville_integral(f, 0.6, 1.4, kSpec),
                  0.23841913007230568002) < 1e-11);
}

TEST_CASE("liouville_integral on exact indicators") {
    const TestFunction ind = indicator_exact(2.0, 3.0);
    CHECK(rel_err(liouville_integral(ind, 1.0, 1.0, kSpec), 1.0) < 1e-13);
    // x < a closed form ((b-x)^mu - (a-x)^mu)/Gamma(mu+1)
    const double mu = 1.6, x = 0.4;
    const double want = (std::pow(3.0 - x, mu) - std::pow(2.0 - x, mu)) /
                        std::exp(std::lgamma(mu + 1.0));
    CHECK(rel_err(liouville_integral(ind, x, mu, kSpec), want) < 1e-12);
    // lower limit inside the support
    const double x2 = 2.5;
    const double want2 = std::pow(3.0 - x2, mu) / std::exp(std::lgamma(mu + 1.0));
    CHECK(rel_err(liouville_integral(ind, x2, mu, kSpec), want2) < 1e-12);
    CHECK(liouville_integral(ind, 3.5, mu, kSpec) == 0.0);
    CHECK_THROWS_AS(liouville_integral(ind, 1.0, 0.0, kSpec), domain_error);
}

TEST_CASE("liouville equals the nu=0 fractional Bessel integral") {
    const TestFunction f = ramp_function();
    for (double alpha : {0.3, 0.9}) {
        for (double x : {0.3, 0.8, 1.7}) {
            const double a = frac_bessel_integral(f, x, OperatorParams(alpha, 0.0), kSpec);
            const double b = liouville_integral(f, x, 2.0 * alpha, kSpec);
            CHECK(std::fabs(a - b) <= 1e-9 * (1.0 + std::fabs(b)));
        }
    }
}

TEST_CASE("saigo_integral trivial parameter reductions") {
    const TestFunction ind = indicator_exact(2.0, 3.0);
    const double x = 1.3, gamma_ = 1.4;
    // beta = -gamma: 2F1 terminates at 1 and the weight drops out
    const double a = saigo_integral([](double) { return 1.0; }, 2.0, 3.0, x,
                                    gamma_, -gamma_, 0.7, kSpec);
    const double b = liouville_integral(ind, x, gamma_, kSpec);
    CHECK(rel_err(a, b) < 1e-12);
    // eta = 0: pure Erdelyi-Kober-type weight t^(-gamma-beta)
    const double beta = 0.4;
    const double c = saigo_integral([](double) { return 1.0; }, 2.0, 3.0, x,
                                    gamma_, beta, 0.0, kSpec);
    const double d =
        integrate_finite(
            [&](double t) {
                return std::pow(t - x, gamma_ - 1.0) * std::pow(t, -gamma_ - beta);
            },
            2.0, 3.0, kSpec)
            .value /
        std::exp(std::lgamma(gamma_));
    CHECK(rel_err(c, d) < 1e-12);
}

TEST_CASE("saigo_reduction matches the fractional Bessel integral") {
    const TestFunction f = bump_function();
    for (double nu : {0.0, 1.0, 2.5}) {
        const OperatorParams p(0.45, nu);
        for (double x : {0.6, 1.1}) {
            const double ib = frac_bessel_integral(f, x, p, kSpec);
            const double sg = saigo_reduction(f, x, p, kSpec);
            CHECK(std::fabs(ib - sg) <= 1e-9 * (1.0 + std::fabs(ib)));
        }
    }
    // nu=0, alpha=1/2: both sides equal the order-1 Liouville integral
    const OperatorParams ph(0.5, 0.0);
    const double lv = liouville_integral(f, 0.8, 1.0, kSpec);
    CHECK(std::fabs(saigo_reduction(f, 0.8, ph, kSpec) - lv) < 1e-9);
}

TEST_CASE("bessel_apply closed forms") {
    const TestFunction g = gaussian_function();
    for (double nu : {0.0, 1.0, 2.5}) {
        for (double x : {0.4, 1.0, 1.9}) {
            const double want = (4 * x * x - 2 - 2 * nu) * std::exp(-x * x);
            CHECK(rel_err(bessel_apply(g, x, nu), want) < 1e-12);
        }
    }
    CHECK(std::fabs(bessel_apply(g, 1.0, 1.0)) < 1e-14);
    const TestFunction x2 = power_function(2.0);
    CHECK(rel_err(bessel_apply(x2, 1.7, 0.8), 2.0 + 2.0 * 0.8) < 1e-13);
    TestFunction bare;
    bare.label = "bare";
    bare.support = TestFunction::Support::Decaying;
    bare.eval_fn = [](double) { return 1.0; };
    CHECK_THROWS_AS(bessel_apply(bare, 1.0, 1.0), capability_error);
}

TEST_CASE("bessel_apply_n polynomial chain and finite-difference oracle") {
    // B_nu x^4 = (12+4nu) x^2, B_nu^2 x^4 = (12+4nu)(2+2nu)
    const TestFunction x4 = power_function(4.0);
    for (double nu : {0.0, 0.7, 3.0}) {
        const double want = (12 + 4 * nu) * (2 + 2 * nu);
        for (double x : {0.6, 1.4}) {
            CHECK(rel_err(bessel_apply_n(x4, x, nu, 2), want) < 1e-11);
        }
        CHECK(rel_err(bessel_apply_n(x4, 1.1, nu, 1), bessel_apply(x4, 1.1, nu)) <
              1e-14);
    }
    // n=2 on the gaussian against central finite differences of B_nu g
    const TestFunction g = gaussian_function();
    const double nu = 1.3, x = 1.2, h = 1e-3;
    const auto bg = [&](double t) { return bessel_apply(g, t, nu); };
    const double fd2 = (bg(x + h) - 2 * bg(x) + bg(x - h)) / (h * h);
    const double fd1 = (bg(x + h) - bg(x - h)) / (2 * h);
    CHECK(std::fabs(bessel_apply_n(g, x, nu, 2) - (fd2 + nu / x * fd1)) < 1e-5);
    CHECK_THROWS_AS(bessel_apply_n(g, 1.0, 1.0, 3), capability_error);
}

TEST_CASE("bessel_power_expansion reproduces the hand expansion for n=2") {
    const double nu = 1.7;
    double c31 = 0, c22 = 0, c13 = 0, c04 = 0;
    for (const BesselPowerTerm& t : bessel_power_expansion(nu, 2)) {
        if (t.inv_pow == 3 && t.deriv == 1) c31 = t.coef;
        if (t.inv_pow == 2 && t.deriv == 2) c22 = t.coef;
        if (t.inv_pow == 1 && t.deriv == 3) c13 = t.coef;
        if (t.inv_pow == 0 && t.deriv == 4) c04 = t.coef;
    }
    CHECK(c31 == doctest::Approx(nu * (2.0 - nu)));
    CHECK(c22 == doctest::Approx(nu * (nu - 2.0)));
    CHECK(c13 == doctest::Approx(2.0 * nu));
    CHECK(c04 == doctest::Approx(1.0));
}

TEST_CASE("dilation covariance of the fractional Bessel integral") {
    // (IB^a f_lam)(x) = lam^(-2a) (IB^a f)(lam x) with f_lam(t) = f(lam t)
    const TestFunction f = bump_function();
    const OperatorParams p(0.6, 1.5);
    for (double lam : {0.5, 2.0}) {
        TestFunction flam;
        flam.label = "bump_dilated";
        flam.support = TestFunction::Support::Compact;
        flam.lo = f.lo / lam;
        flam.hi = f.hi / lam;
        flam.eval_fn = [&f, lam](double t) { return f(lam * t); };
        for (double x : {0.9 / lam, 1.3 / lam}) {
            const double lhs = frac_bessel_integral(flam, x, p, kSpec);
            const double rhs = std::pow(lam, -2.0 * p.alpha) *
                               frac_bessel_integral(f, lam * x, p, kSpec);
            CHECK(std::fabs(lhs - rhs) <= 1e-8 * (1.0 + std::fabs(rhs)));
        }
    }
}

TEST_CASE("frac_bessel_integral vanishes past the support") {
    const TestFunction f = bump_function();
    const OperatorParams p(0.8, 0.5);
    CHECK(frac_bessel_integral(f, 2.0, p, kSpec) == 0.0);
    CHECK(frac_bessel_integral(f, 7.3, p, kSpec) == 0.0);
}

TEST_CASE("representation choice gives consistent operator values") {
    const TestFunction f = bump_function();
    const OperatorParams p(0.9, 2.2);
    const double via_hyp = frac_bessel_integral(f, 0.7, p, kSpec, KernelRep::Hyp);
    const double via_leg =
        frac_bessel_integral(f, 0.7, p, kSpec, KernelRep::Legendre);
    CHECK(rel_err(via_hyp, via_leg) < 1e-9);
}

TEST_CASE("power_closed_form pinned values and validity") {
    // m=-3, alpha=1/4, nu=1/2: the Gamma(3/2) factors cancel
    const PowerCoefficient pc = power_closed_form(-3.0, OperatorParams(0.25, 0.5));
    REQUIRE(pc.valid);
    CHECK(rel_err(pc.coefficient, kPowerCoefRef) < 1e-14);
    // IB^a x^m = coefficient x^(2a+m), against the truncated quadrature oracle
    for (double x : {0.5, 2.0}) {
        const double closed = pc.coefficient * std::pow(x, -2.5);
        const double numeric =
            frac_bessel_integral_power(-3.0, OperatorParams(0.25, 0.5), x, kSpec);
        CHECK(rel_err(numeric, closed) < 1e-8);
    }
    CHECK_FALSE(power_closed_form(0.5, OperatorParams(0.3, 0.4)).valid);
    CHECK_FALSE(power_closed_form(-1.0, OperatorParams(0.5, 1.1)).valid);
    CHECK_THROWS_AS(
        frac_bessel_integral_power(0.5, OperatorParams(0.3, 0.1), 1.0, kSpec),
        domain_error);
}

TEST_CASE("power_closed_form nu=0 reduces to the Liouville power formula") {
    for (double alpha : {0.25, 0.8}) {
        const double m = -2.0 * alpha - 1.3;
        const PowerCoefficient pc = power_closed_form(m, OperatorParams(alpha, 0.0));
        const double want = gamma_ratio_eval(GammaRatio({-m - 2 * alpha}, {-m}));
        CHECK(rel_err(pc.coefficient, want) < 1e-13);
    }
}

TEST_CASE("frac_bessel_derivative at integer order is B_nu") {
    const TestFunction g = gaussian_function();
    for (double nu : {0.5, 2.0}) {
        const OperatorParams p(1.0, nu);
        for (double x : {0.8, 1.5}) {
            const double fd = frac_bessel_derivative(g, x, p, kSpec);
            const double want = bessel_apply(g, x, nu);
            CHECK(std::fabs(fd - want) <= 1e-8 * (1.0 + std::fabs(want)));
        }
    }
}

TEST_CASE("frac_bessel_derivative domain guard near zero") {
    const TestFunction g = gaussian_function();
    const OperatorParams p(1.0, 1.0);
    CHECK_THROWS_AS(frac_bessel_derivative(g, 4e-4, p, kSpec), domain_error);
    // derivative chains stop at order 4, so alpha > 2 is out of reach
    CHECK_THROWS_AS(frac_bessel_derivative(g, 1.0, OperatorParams(2.5, 1.0), kSpec),
                    capability_error);
}

TEST_CASE("saigo_integral rejects bad parameters") {
    const auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(saigo_integral(one, 2.0, 3.0, 1.0, 0.0, 0.1, 0.2, kSpec),
                    domain_error);
    CHECK_THROWS_AS(saigo_integral(one, 2.0, 3.0, -1.0, 1.0, 0.1, 0.2, kSpec),
                    domain_error);
    CHECK(saigo_integral(one, 2.0, 3.0, 3.5, 1.0, 0.1, 0.2, kSpec) == 0.0);
}

TEST_CASE("gamma pole in the nominally valid power sliver fails loudly") {
    // m + 2a = 0 with nu < 1 satisfies m+2a+nu < 1, but the bracket hits
    // Gamma(0) (and the defining integral diverges there anyway)
    CHECK_THROWS_AS(power_closed_form(-1.0, OperatorParams(0.5, 0.4)),
                    domain_error);
}

TEST_CASE("TestFunction derivative plumbing") {
    const TestFunction f = bump_function();
    CHECK(f.derivative(1.5, 0) == doctest::Approx(std::exp(-1.0)));
    CHECK(f.derivative(0.5, 2) == 0.0); // outside support
    CHECK_THROWS_AS(f.derivative(1.5, 5), capability_error);
    TestFunction bare;
    bare.label = "bare";
    bare.support = TestFunction::Support::Decaying;
    bare.eval_fn = [](double) { return 0.0; };
    CHECK_THROWS_AS(bare.derivative(1.0, 1), capability_error);
}
