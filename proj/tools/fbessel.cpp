// Command-line front end: evaluate the fractional Bessel integral and
// derivative on the semiaxis, tabulate kernels, query Mellin symbols, print
// the power-function closed form, and run the verification suites.

#include "fbessel/corpus.hpp"
#include "fbessel/errors.hpp"
#include "fbessel/kernels.hpp"
#include "fbessel/mellin.hpp"
#include "fbessel/operators.hpp"
#include "fbessel/quad.hpp"
#include "fbessel/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace fbessel;

constexpr int kExitOk = 0;
constexpr int kExitAccuracy = 1;
constexpr int kExitUsage = 2;

// 17 significant digits: CSV rows double as regression fixtures.
void print_csv(double v) { std::printf("%.17g", v); }

struct GridOpts {
    std::optional<double> at;
    double from = 0.0, to = 0.0;
    int points = 0;

    std::vector<double> grid() const {
        if (at) return {*at};
        std::vector<double> xs;
        for (int i = 0; i < points; ++i) {
            const double t =
                (points == 1) ? 0.0 : static_cast<double>(i) / (points - 1);
            xs.push_back(from + (to - from) * t);
        }
        return xs;
    }

    void check() const {
        if (at) {
            if (!(*at > 0.0)) throw domain_error("--at must be positive");
            return;
        }
        if (points < 1) throw domain_error("--points must be >= 1");
        if (!(from > 0.0) || !(to >= from))
            throw domain_error("grid must satisfy 0 < from <= to");
    }
};

TestFunction resolve_function(const std::string& name,
                              std::optional<double> power_m) {
    if (name == "power" && power_m) return power_function(*power_m);
    return corpus_by_name(name);
}

int cmd_eval(const std::string& fn_name, std::optional<double> power_m,
             double alpha, double nu, bool derivative, const GridOpts& go,
             const std::string& format, const QuadSpec& spec) {
    go.check();
    const TestFunction f = resolve_function(fn_name, power_m);
    const OperatorParams p(alpha, nu);
    std::vector<std::array<double, 3>> rows;
    for (double x : go.grid()) {
        double value, err;
        if (derivative) {
            value = frac_bessel_derivative(f, x, p, spec);
            // finite differences carry no per-point estimate; report the
            // inner-quadrature tolerance as the resolution floor
            err = std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
        } else {
            const QuadResult r = frac_bessel_integral_err(f, x, p, spec);
            value = r.value;
            err = r.err_est;
        }
        rows.push_back({x, value, err});
    }
    if (format == "json") {
        nlohmann::ordered_json out;
        out["schema"] = 1;
        nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            jrows.push_back({{"x", r[0]}, {"value", r[1]}, {"err_est", r[2]}});
        out["rows"] = jrows;
        std::printf("%s\n", out.dump(2).c_str());
        return kExitOk;
    }
    std::printf("x,value,err_est\n");
    for (const auto& r : rows) {
        print_csv(r[0]);
        std::printf(",");
        print_csv(r[1]);
        std::printf(",");
        print_csv(r[2]);
        std::printf("\n");
    }
    return kExitOk;
}

int cmd_table(double alpha, double nu, double x, const GridOpts& go) {
    go.check();
    const OperatorParams p(alpha, nu);
    std::printf("x,y,kernel_hyp,kernel_legendre,rel_diff\n");
    for (double y : go.grid()) {
        if (!(y > x)) throw domain_error("kernel table needs y > x");
        const double kh = kernel_hyp(x, y, p);
        const double kl = kernel_legendre(x, y, p);
        const double rel =
            std::fabs(kh - kl) / std::max({std::fabs(kh), std::fabs(kl), 1e-300});
        print_csv(x);
        std::printf(",");
        print_csv(y);
        std::printf(",");
        print_csv(kh);
        std::printf(",");
        print_csv(kl);
        std::printf(",");
        print_csv(rel);
        std::printf("\n");
    }
    return kExitOk;
}

int cmd_mellin(double alpha, double nu, const std::vector<double>& svals,
               const std::string& fn_name, std::optional<double> power_m,
               bool allow_negative, const QuadSpec& spec) {
    const OperatorParams p(alpha, nu);
    if (fn_name.empty()) {
        // evaluate everything first so a domain error cannot truncate a row
        std::vector<std::array<double, 3>> rows;
        for (double s : svals)
            rows.push_back({s, mellin_symbol_ib(s, p, allow_negative),
                            mellin_symbol_db(s, p)});
        std::printf("s,symbol_ib,symbol_db\n");
        for (const auto& r : rows) {
            print_csv(r[0]);
            std::printf(",");
            print_csv(r[1]);
            std::printf(",");
            print_csv(r[2]);
            std::printf("\n");
        }
        return kExitOk;
    }
    const TestFunction f = resolve_function(fn_name, power_m);
    if (f.support != TestFunction::Support::Compact)
        throw domain_error("mellin --fn needs a compactly supported function");
    std::printf("s,symbol_ib,shifted_transform,rhs,lhs,rel_err\n");
    for (double s : svals) {
        const double sym = mellin_symbol_ib(s, p, allow_negative);
        const double shifted = mellin_transform(f, s + 2.0 * alpha, spec);
        const double rhs = sym * shifted;
        const auto F = [&](double x) {
            return frac_bessel_integral(f, x, p, spec);
        };
        const double e1 = std::min(0.0, 1.0 - nu);
        const double e2 = std::max(0.0, 1.0 - nu);
        QuadSpec lhs_spec = spec;
        lhs_spec.rel_tol = std::max(spec.rel_tol, 1e-8);
        lhs_spec.abs_tol = std::max(spec.abs_tol, 1e-12);
        const double lhs =
            mellin_of_pointwise(F, s, f.hi, e1, e2, 1e-5, lhs_spec);
        const double rel =
            std::fabs(lhs - rhs) / std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
        print_csv(s);
        std::printf(",");
        print_csv(sym);
        std::printf(",");
        print_csv(shifted);
        std::printf(",");
        print_csv(rhs);
        std::printf(",");
        print_csv(lhs);
        std::printf(",");
        print_csv(rel);
        std::printf("\n");
    }
    return kExitOk;
}

int cmd_closed_form(double m, double alpha, double nu) {
    const OperatorParams p(alpha, nu);
    const PowerCoefficient pc = power_closed_form(m, p);
    if (!pc.valid) {
        std::fprintf(stderr,
                     "closed-form: outside the validity region, requires "
                     "m + 2*alpha + nu < 1 (got %.17g)\n",
                     m + 2.0 * alpha + nu);
        return kExitUsage;
    }
    std::printf("m,alpha,nu,valid,coefficient,exponent\n");
    print_csv(m);
    std::printf(",");
    print_csv(alpha);
    std::printf(",");
    print_csv(nu);
    std::printf(",true,");
    print_csv(pc.coefficient);
    std::printf(",");
    print_csv(2.0 * alpha + m);
    std::printf("\n");
    return kExitOk;
}

int cmd_verify(const std::string& suite) {
    std::vector<std::string> suites;
    if (suite.empty()) {
        suites = suite_names();
    } else {
        suites = {suite};
    }
    nlohmann::ordered_json report;
    report["schema"] = 1;
    report["suite"] = suite.empty() ? "all" : suite;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    bool all_pass = true;
    for (const std::string& s : suites) {
        for (const Check& c : run_suite(s)) {
            checks.push_back({{"name", c.name},
                              {"error", c.error},
                              {"tol", c.tol},
                              {"pass", c.pass}});
            all_pass = all_pass && c.pass;
        }
    }
    report["checks"] = checks;
    std::printf("%s\n", report.dump(2).c_str());
    return all_pass ? kExitOk : kExitAccuracy;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional Bessel operator toolkit on the semiaxis"};
    app.require_subcommand(1);

    QuadSpec spec;
    double alpha = 0.5, nu = 0.0, m = -3.0, x = 1.0;
    std::string fn_name = "bump", suite, format = "csv";
    std::optional<double> power_m;
    bool derivative = false, allow_negative = false;
    GridOpts go;
    std::vector<double> svals;

    const auto add_params = [&](CLI::App* c, bool with_tols = true) {
        c->add_option("--alpha", alpha, "fractional order alpha > 0");
        c->add_option("--nu", nu, "singularity parameter nu >= 0");
        if (with_tols) {
            c->add_option("--rel-tol", spec.rel_tol, "quadrature relative tolerance");
            c->add_option("--abs-tol", spec.abs_tol, "quadrature absolute tolerance");
            c->add_option("--max-panels", spec.max_panels, "quadrature panel budget");
        }
    };
    const auto add_grid = [&](CLI::App* c) {
        c->add_option("--at", go.at, "single evaluation point");
        c->add_option("--from", go.from, "grid start");
        c->add_option("--to", go.to, "grid end");
        c->add_option("--points", go.points, "grid point count");
    };
    const auto add_fn = [&](CLI::App* c) {
        c->add_option("--fn", fn_name, "corpus function name")
            ->check(CLI::IsMember(corpus_names()));
        c->add_option("--m", power_m, "power exponent (with --fn power)");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate IB^alpha f or DB^alpha f on a grid");
    add_params(eval);
    add_grid(eval);
    add_fn(eval);
    eval->add_flag("--derivative", derivative, "apply DB^alpha instead of IB^alpha");
    eval->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* table = app.add_subcommand("table", "tabulate both kernel representations at fixed x");
    add_params(table, false);
    table->add_option("--x", x, "kernel first argument x > 0");
    add_grid(table);

    CLI::App* mellin = app.add_subcommand("mellin", "Mellin symbols, optionally checked against the numeric transform");
    add_params(mellin);
    mellin->add_option("--s", svals, "transform variable values")->required();
    mellin->add_option("--fn", fn_name, "corpus function for the numeric check")
        ->check(CLI::IsMember(corpus_names()));
    mellin->add_flag("--allow-negative-s", allow_negative,
                     "permit pole-free probes with s <= 0");

    CLI::App* closed = app.add_subcommand("closed-form", "power-function closed form IB^alpha x^m");
    add_params(closed, false);
    closed->add_option("--m", m, "power exponent")->required();

    CLI::App* verify = app.add_subcommand("verify", "run verification suites, emit a JSON report");
    verify->add_option("--suite", suite, "restrict to one suite")
        ->check(CLI::IsMember(suite_names()));

    std::string mellin_fn;
    mellin->callback([&] { mellin_fn = mellin->count("--fn") ? fn_name : ""; });

    try {
        app.parse(argc, argv);
        spec.validate();
        if (eval->parsed())
            return cmd_eval(fn_name, power_m, alpha, nu, derivative, go, format,
                            spec);
        if (table->parsed()) return cmd_table(alpha, nu, x, go);
        if (mellin->parsed())
            return cmd_mellin(alpha, nu, svals, mellin_fn, power_m,
                              allow_negative, spec);
        if (closed->parsed()) return cmd_closed_form(m, alpha, nu);
        if (verify->parsed()) return cmd_verify(suite);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kExitUsage;
    } catch (const accuracy_error& e) {
        std::fprintf(stderr, "accuracy error: %s (best %.17g, err_est %.17g)\n",
                     e.what(), e.value, e.err_est);
        return kExitAccuracy;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitAccuracy;
    }
}
