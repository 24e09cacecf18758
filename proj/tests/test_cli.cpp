#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fbessel/corpus.hpp"
#include "fbessel/operators.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

#ifndef FBESSEL_BIN
#error "FBESSEL_BIN must point at the CLI binary"
#endif

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(FBESSEL_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const std::size_t nl = s.find('\n', pos);
        if (nl == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return out;
}

} // namespace

TEST_CASE("eval emits the contracted CSV shape") {
    const RunResult r =
        run("eval --alpha 0.5 --nu 0 --fn bump --from 0.2 --to 1.0 --points 5");
    CHECK(r.status == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "x,value,err_est");
    for (std::size_t i = 1; i < ls.size(); ++i)
        CHECK(std::count(ls[i].begin(), ls[i].end(), ',') == 2);
}

TEST_CASE("eval beyond the support produces zero rows") {
    const RunResult r = run("eval --alpha 0.5 --nu 1 --fn bump --at 3.5");
    CHECK(r.status == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[1].rfind("3.5,0,", 0) == 0);
}

TEST_CASE("CSV output is bit-identical across runs") {
    const std::string args =
        "eval --alpha 0.7 --nu 1.3 --fn ramp --from 0.4 --to 2.0 --points 7";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("nan") == std::string::npos);
}

TEST_CASE("usage and domain failures exit with status 2") {
    CHECK(run("eval --alpha 0.5 --nu 0 --fn nosuch --at 1").status == 2);
    CHECK(run("eval --alpha -1 --nu 0 --fn bump --at 1").status == 2);
    CHECK(run("eval --alpha 0.5 --nu 0 --fn bump --from 2 --to 1 --points 3").status == 2);
    CHECK(run("eval --alpha 0.5 --nu 0 --fn bump --points 0 --from 1 --to 2").status == 2);
    CHECK(run("closed-form --m 0.5 --alpha 0.3 --nu 0.4").status == 2);
    CHECK(run("verify --suite nosuch").status == 2);
    CHECK(run("mellin --alpha 0.5 --nu 0.5 --s -0.25").status == 2);
}

TEST_CASE("closed-form prints the coefficient row") {
    const RunResult r = run("closed-form --m -3 --alpha 0.25 --nu 0.5");
    CHECK(r.status == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "m,alpha,nu,valid,coefficient,exponent");
    CHECK(ls[1].find("0.697366413368734") != std::string::npos);
    CHECK(ls[1].find("-2.5") != std::string::npos);
}

TEST_CASE("kernel table exposes both representations") {
    const RunResult r =
        run("table --alpha 0.75 --nu 2 --x 1.0 --from 1.1 --to 10 --points 4");
    CHECK(r.status == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 5);
    CHECK(ls[0] == "x,y,kernel_hyp,kernel_legendre,rel_diff");
}

TEST_CASE("mellin symbols honor the negative-s policy") {
    CHECK(run("mellin --alpha 0.2 --nu 0.5 --s -0.25 --allow-negative-s").status == 0);
    const RunResult r = run("mellin --alpha 0.5 --nu 0 --s 2");
    CHECK(r.status == 0);
    CHECK(lines(r.out)[1].rfind("2,0.5,", 0) == 0);
}

TEST_CASE("eval values agree with the in-process operator") {
    const RunResult r = run("eval --alpha 1 --nu 3 --fn gaussian --at 1.0");
    CHECK(r.status == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    const double printed = std::strtod(ls[1].c_str() + ls[1].find(',') + 1, nullptr);
    const fbessel::QuadSpec spec;
    const double direct = fbessel::frac_bessel_integral(
        fbessel::gaussian_function(), 1.0, fbessel::OperatorParams(1.0, 3.0), spec);
    CHECK(std::fabs(printed - direct) <= 1e-12 * (1.0 + std::fabs(direct)));
}

TEST_CASE("accuracy failures exit with status 1") {
    const RunResult r = run(
        "eval --alpha 0.5 --nu 0 --fn bump --at 0.7 --rel-tol 1e-14 "
        "--abs-tol 1e-300 --max-panels 2");
    CHECK(r.status == 1);
}

TEST_CASE("verify emits a schema-1 JSON report and exits 0 on pass") {
    const RunResult r = run("verify --suite specfun");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("suite") == "specfun");
    const auto& checks = j.at("checks");
    CHECK(checks.size() >= 4);
    std::string prev;
    for (const auto& c : checks) {
        CHECK(c.at("pass").get<bool>());
        CHECK(c.at("error").get<double>() <= c.at("tol").get<double>());
        const std::string name = c.at("name").get<std::string>();
        CHECK(prev <= name); // sorted by name
        prev = name;
    }
}
