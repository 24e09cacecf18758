#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fbessel/errors.hpp"
#include "fbessel/kernels.hpp"
#include "fbessel/specfun.hpp"

#include "test_util.hpp"

#include <cmath>

using namespace fbessel;

TEST_CASE("OperatorParams validation and derived parameters") {
    const OperatorParams p(0.75, 2.0);
    CHECK(p.a == doctest::Approx(0.75 + 0.5));
    CHECK(p.b == 0.75);
    CHECK(p.c == 1.5);
    CHECK_THROWS_AS(OperatorParams(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(OperatorParams(-1.0, 1.0), domain_error);
    CHECK_THROWS_AS(OperatorParams(1.0, -0.1), domain_error);
}

TEST_CASE("kernel closed value at alpha=1, nu=3") {
    const OperatorParams p(1.0, 3.0);
    // Property-3 closed form: (1/(nu-1)) y ((x/y)^(1-nu) - 1) = 3 at (1,2)
    CHECK(rel_err(kernel_hyp(1, 2, p), 3.0) < 1e-13);
    CHECK(rel_err(kernel_legendre(1, 2, p), 3.0) < 1e-12);
    CHECK(rel_err(kernel_alpha1(1, 2, 3.0), 3.0) < 1e-15);
}

TEST_CASE("kernel_nu0 closed forms") {
    CHECK(kernel_nu0(1, 2, 0.5) == doctest::Approx(1.0));
    CHECK(kernel_nu0(1, 3, 1.0) == doctest::Approx(2.0));
    const OperatorParams p(0.7, 0.0);
    CHECK(rel_err(kernel_hyp(0.9, 4.1, p), kernel_nu0(0.9, 4.1, 0.7)) < 1e-12);
}

TEST_CASE("kernel_alpha1 logarithmic branch") {
    CHECK(rel_err(kernel_alpha1(1, 2, 1.0), 2.0 * std::log(2.0)) < 1e-15);
    // the expansion band agrees with the direct hypergeometric kernel
    for (double nu : {1.0 + 3e-5, 1.0 - 3e-5}) {
        const OperatorParams p(1.0, nu);
        CHECK(rel_err(kernel_alpha1(0.8, 2.9, nu), kernel_hyp(0.8, 2.9, p)) < 1e-11);
    }
    // inside |nu-1| < 1e-8 the limit branch replaces the closed form; its
    // inherent error is (nu-1) ln(y/x)/2, bounded here by 2e-9 * L / 2
    const OperatorParams p(1.0, 1.0 + 2e-9);
    CHECK(rel_err(kernel_alpha1(0.8, 2.9, 1.0 + 2e-9), kernel_hyp(0.8, 2.9, p)) <
          2e-9 * std::log(2.9 / 0.8));
}

TEST_CASE("kernel vanishes toward the diagonal for 2a-1 > 0") {
    const OperatorParams p(1.0, 2.0);
    double prev = kernel_hyp(1.0, 1.0 + 1e-2, p);
    for (double eps : {1e-3, 1e-4, 1e-5}) {
        const double v = kernel_hyp(1.0, 1.0 + eps, p);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev < 1e-4);
}

TEST_CASE("kernels reject bad geometry") {
    const OperatorParams p(1.0, 1.0);
    CHECK_THROWS_AS(kernel_hyp(2, 1, p), domain_error);
    CHECK_THROWS_AS(kernel_hyp(1, 1, p), domain_error);
    CHECK_THROWS_AS(kernel_hyp(-1, 2, p), domain_error);
    CHECK_THROWS_AS(kernel_legendre(2, 1, p), domain_error);
    CHECK_THROWS_AS(kernel_alpha1(2, 1, 0.5), domain_error);
    CHECK_THROWS_AS(kernel_nu0(2, 1, 0.5), domain_error);
}

TEST_CASE("reduced kernels match full/u^(2a-1) away from the diagonal") {
    for (KernelRep rep : {KernelRep::Hyp, KernelRep::Legendre}) {
        const OperatorParams p(0.65, 2.4);
        const KernelFunctions k = make_kernel(rep, p);
        for (double y : {1.3, 2.0, 6.0}) {
            const double x = 1.0;
            const double u = (y - x) * (y + x);
            const double via_reduced =
                k.reduced(x, y, u) * std::pow(u, 2.0 * p.alpha - 1.0);
            CHECK(rel_err(via_reduced, k.full(x, y)) < 1e-12);
        }
    }
}

TEST_CASE("make_kernel guards the specialized representations") {
    CHECK_THROWS_AS(make_kernel(KernelRep::Alpha1, OperatorParams(0.5, 1.0)),
                    domain_error);
    CHECK_THROWS_AS(make_kernel(KernelRep::Nu0, OperatorParams(0.5, 1.0)),
                    domain_error);
}

TEST_CASE("legendre_p ties to the hypergeometric kernel at a pinned tuple") {
    // (alpha, nu, x, y) = (0.75, 2.0, 1.0, 2.0): the kernel written through
    // P^{1/2-a}_{nu/2-1}((x/y+y/x)/2) must reproduce the 2F1 form
    const double alpha = 0.75, nu = 2.0, x = 1.0, y = 2.0;
    const OperatorParams p(alpha, nu);
    const double arg = 0.5 * (x / y + y / x);
    const double via_p =
        std::exp(std::lgamma(alpha + 0.5) - std::lgamma(2.0 * alpha)) *
        std::pow((y - x) * (y + x), alpha - 0.5) * std::pow(y / x, 0.5 * nu) *
        legendre_p(0.5 - alpha, 0.5 * nu - 1.0, arg);
    CHECK(rel_err(via_p, kernel_hyp(x, y, p)) < 1e-12);
}

TEST_CASE("deep ratio y/x stays finite and positive") {
    const OperatorParams p(0.3, 4.5);
    const double v = kernel_hyp(1e-4, 50.0, p);
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
    CHECK(rel_err(v, kernel_legendre(1e-4, 50.0, p)) < 1e-9);
}
