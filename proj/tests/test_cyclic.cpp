#include "suq2/checks.hpp"
#include "suq2/parser.hpp"

#include <doctest.h>

#include <cmath>

using namespace suq2;

namespace {

AlgebraElement E(const char* s) { return parse_element(s); }

ZetaContext at(double q) {
    ZetaContext ctx;
    ctx.q = q;
    return ctx;
}

}  // namespace

TEST_CASE("b and B square to zero and anticommute") {
    auto r = bicomplex_check(100, 2024);
    CHECK(r.samples == 100);
    CHECK(r.nonzero_b2 == 0);
    CHECK(r.nonzero_B2 == 0);
    CHECK(r.nonzero_bB == 0);
}

TEST_CASE("coboundary conventions on a hand-computed example") {
    // psi(a0) = value table on single words; (b psi)(x, y) = psi(x y) - psi(y x)
    Cochain<Rational> psi{0, [](const Args& a) { return Rational(static_cast<long>(a[0].terms().begin()->first.size())); }, "len"};
    CHECK(hochschild_b(psi)({E("a"), E("b b")}) == 0);
    Cochain<Rational> first{1, [](const Args& a) { return a[0] == E("1") ? Rational(1) : Rational(0); }, "first"};
    // B first(x) = first(1, x) + first(x, 1)
    CHECK(connes_B(first)({E("a")}) == 1);
    CHECK_THROWS(psi({E("a"), E("b")}));
}

TEST_CASE("residue cochains vanish off bidegree zero") {
    auto ctx = at(0.5);
    auto f1 = phi1(ctx);
    auto p1 = psi1(ctx);
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{{"a", "a"}, {"b", "a*"}, {"a* b", "b"}}) {
        CHECK(f1({E(x), E(y)}) == 0.0);
        CHECK(p1({E(x), E(y)}) == 0.0);
    }
}

TEST_CASE("eta cochain closed forms at q = 0") {
    auto p0 = phi0_prop2(at(0.0));
    CHECK(p0({E("1")}) == doctest::Approx(0.5).epsilon(1e-9));
    for (int k = 0; k <= 3; ++k) {
        auto x = Monomial{k, 0, 0}.element() * E("b* b") * Monomial{0, 0, k}.element();
        CHECK(p0({x}) == doctest::Approx(2.0 / 3 - k - k * k).epsilon(1e-9));
    }
}

TEST_CASE("canonical monomials") {
    auto m = as_monomial(E("a* a* b* a"));
    REQUIRE(m);
    CHECK(m->k == 2);
    CHECK(m->n == -1);
    CHECK(m->l == 1);
    CHECK(m->element() == E("a* a* b* a"));
    CHECK_FALSE(as_monomial(E("a a*")));
    CHECK(tau1_closed_q0(E("b*"), E("b")) == 2.0);
    CHECK(tau1_closed_q0(E("b"), E("b*")) == -2.0);
    CHECK(tau1_closed_q0(E("a"), E("a*")) == 0.0);
    CHECK_THROWS(tau1_closed_q0(E("a + b"), E("b")));
}

TEST_CASE("q = 0 cocycle identities on a small battery") {
    auto r = theorem3_check(1, 1, 1);
    CHECK(r.phi1_rows.size() > 10);
    CHECK(r.phi3_rows.size() == 36);
    CHECK(r.max_residual < 1e-9);
    CHECK(r.ok);
}

TEST_CASE("psi1 with the |D|^-2 second term is antisymmetric") {
    auto ctx = at(0.5);
    auto p = psi1(ctx), printed = psi1(ctx, Psi1Variant::AsPrinted);
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{{"a*", "a"}, {"b*", "b"}, {"a* b", "b* a"}}) {
        CHECK(p({E(x), E(y)}) == doctest::Approx(-p({E(y), E(x)})).epsilon(1e-10));
    }
    CHECK(std::fabs(printed({E("a*"), E("a")}) + printed({E("a"), E("a*")})) > 0.1);
}

TEST_CASE("psi1 is twice the cycle cocycle") {
    for (double q : {0.3, 0.5, 0.8}) {
        auto r = theorem5_check(q);
        INFO("q = ", q);
        CHECK(r.residual_factor2 < 1e-8);
        CHECK_FALSE(r.literal_ok);
    }
}

TEST_CASE("Chern character differs from the cycle cocycle by a coboundary") {
    auto r = corollary1_check(0.5);
    CHECK(r.frozen_sign == -1);
    CHECK(r.chi_factor == 2.0);
    CHECK(r.residual < 1e-8);
    CHECK(r.g_term_residual < 1e-8);
}

TEST_CASE("eta invariant of the projection powers") {
    auto r = theorem6_check(2, {0.3, 0.5}, 1e-8, 8, 0.5);
    CHECK(r.rows.size() == 4);
    CHECK(r.max_residual < 1e-8);
    CHECK(r.diagonal_residual < 1e-12);
}

TEST_CASE("Fredholm index of the compressed unitary") {
    auto id = index_pairing(0.5, {6, 8}, true);
    CHECK(id.index == 0);
    CHECK(id.stable);
    for (double q : {0.0, 0.5}) {
        auto r = index_pairing(q, {6, 8, 10});
        CHECK(r.stable);
        CHECK(r.index == -1);
        CHECK(r.cokernel.back() == 1);
    }
}
