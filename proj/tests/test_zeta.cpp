#include "suq2/parser.hpp"
#include "suq2/zeta.hpp"

#include <doctest.h>

#include <cmath>

using namespace suq2;

namespace {

double res(const char* op, int pole, double q, Restriction r = Restriction::Full) {
    ZetaContext ctx;
    ctx.q = q;
    return residue(parse_operator(op), pole, r, ctx);
}

}  // namespace

TEST_CASE("zeta at negative integers") {
    CHECK(riemann_zeta_negative(0) == doctest::Approx(-0.5));
    CHECK(riemann_zeta_negative(1) == doctest::Approx(-1.0 / 12));
    CHECK(riemann_zeta_negative(2) == 0.0);
    CHECK(riemann_zeta_negative(3) == doctest::Approx(1.0 / 120));
    CHECK(riemann_zeta_negative(5) == doctest::Approx(-1.0 / 252));
}

TEST_CASE("fit recovers a polynomial plus a decaying remainder") {
    std::vector<double> c(81);
    for (int N = 0; N <= 80; ++N) c[N] = 3.0 * N * N - 2.0 * N + 0.5 + std::pow(0.6, N);
    auto f = fit_asymptotics(c, 1e-10);
    REQUIRE(f.stabilized);
    CHECK(f.degree == 2);
    CHECK(f.lambda[2] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(f.lambda[1] == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(f.lambda[0] == doctest::Approx(0.5).epsilon(1e-9));
    // sum over N >= 1 of 0.6^N
    CHECK(f.remainder_sum == doctest::Approx(1.5).epsilon(1e-9));

    std::vector<double> zero(50, 0.0);
    CHECK(fit_asymptotics(zero, 1e-10).identically_zero);
}

TEST_CASE("fit reports failure on non-polynomial growth") {
    std::vector<double> c(60);
    for (int N = 0; N < 60; ++N) c[N] = std::exp(0.2 * N);
    CHECK_FALSE(fit_asymptotics(c, 1e-10).stabilized);
}

TEST_CASE("reference residues") {
    for (double q : {0.0, 0.5, 0.8}) {
        CHECK(res("1", 3, q) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(res("1", 2, q) == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(res("P", 2, q) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::fabs(res("F", 2, q)) < 1e-10);
        CHECK(res("F", 1, q) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("zeta values at zero from the level counts") {
    ZetaContext ctx;
    // sum_N (N+1)^2 N^-s at s = 0, with the kernel term 1
    CHECK(zeta_value_at_zero(parse_operator("1"), Restriction::Full, ctx) == doctest::Approx(1.0 / 3).epsilon(1e-10));
    // sum_N (N+1) N^-s on the P-sector
    CHECK(zeta_value_at_zero(parse_operator("1"), Restriction::PSector, ctx) == doctest::Approx(5.0 / 12).epsilon(1e-10));
    ctx.eps = 2.0;
    CHECK(zeta_value_at_zero(parse_operator("1"), Restriction::Full, ctx) == doctest::Approx(1.0 / 3).epsilon(1e-10));
}

TEST_CASE("residues are linear") {
    for (double q : {0.3, 0.7}) {
        double lhs = res("2 a a* - 3 b* b", 3, q), rhs = 2 * res("a a*", 3, q) - 3 * res("b* b", 3, q);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("traces of nonzero bidegree vanish identically") {
    ZetaContext ctx;
    ctx.q = 0.4;
    for (const char* w : {"a", "b", "a b*", "a* a* b", "b D(b)"}) {
        auto c = level_traces(parse_operator(w), 20, Restriction::Full, ctx);
        for (double v : c) CHECK(v == 0.0);
    }
}

TEST_CASE("exact level traces match numeric ones") {
    Engine<RationalField> ex(rational_field(Rational(1, 2)));
    ZetaContext ctx;
    ctx.q = 0.5;
    auto op = parse_operator("a* a b b* + b* b");
    auto nu = level_traces(op, 8, Restriction::Full, ctx);
    for (int N = 0; N <= 8; ++N) CHECK(level_trace_exact(ex, op, N, Restriction::Full).to_double() == doctest::Approx(nu[N]).epsilon(1e-12));
}

TEST_CASE("H' sector at q = 0") {
    CHECK(hprime_residue(parse_operator("1"), 1).level_counting == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(hprime_residue(parse_operator("1"), 2).level_counting == doctest::Approx(2.0).epsilon(1e-10));
    for (int n = 1; n <= 3; ++n) {
        std::string bn = "b^" + std::to_string(n), bsn = "b*^" + std::to_string(n);
        auto first = hprime_residue(parse_operator(bsn + " D(" + bn + ")"), 1);
        auto second = hprime_residue(parse_operator(bsn + " g(D(" + bn + "))"), 3);
        CHECK(first.level_counting == doctest::Approx(n * n).epsilon(1e-10));
        CHECK(first.difference() < 1e-10);
        CHECK(second.level_counting == doctest::Approx(4 * n * n).epsilon(1e-10));
        CHECK(second.difference() < 1e-10);
        double full = res((bsn + " D(" + bn + ")").c_str(), 1, 0.0) - 0.25 * res((bsn + " g(D(" + bn + "))").c_str(), 3, 0.0);
        CHECK(full == doctest::Approx(2.0 * n).epsilon(1e-10));
    }
}

TEST_CASE("dimension spectrum") {
    for (double q : {0.4}) {
        ZetaContext ctx;
        ctx.q = q;
        auto items = dimension_spectrum_probe(default_spectrum_battery(), ctx);
        CHECK(items.size() > 80);
        for (const auto& it : items) {
            INFO(it.word, " at q = ", q, ": ", it.error);
            CHECK(it.ok);
            if (it.zero_expected) CHECK(it.identically_zero);
            else CHECK(it.degree <= 2);
        }
    }
}

TEST_CASE("slowly decaying remainders do not fake a high degree") {
    ZetaContext ctx;
    ctx.q = 0.7;
    auto s = level_trace_series(parse_operator("P a* a"), Restriction::Full, ctx);
    REQUIRE(s.fit.stabilized);
    CHECK(s.fit.degree <= 2);
}
