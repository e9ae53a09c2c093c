#include "suq2/scalar.hpp"

#include <doctest.h>

#include <random>

using namespace suq2;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), c(-5, 5);
    std::vector<Rational> cs(deg(rng) + 1);
    for (auto& x : cs) x = c(rng);
    return Poly(cs);
}

}  // namespace

TEST_CASE("poly arithmetic") {
    Poly p = Poly::one_minus_q_pow(1), s({Rational(1), Rational(1)});
    CHECK(p * s == Poly::one_minus_q_pow(2));
    CHECK((p - p).is_zero());
    CHECK(Poly::monomial(3, 2).eval(Rational(1, 2)) == Rational(1, 4));
    CHECK(Poly::one_minus_q_pow(2).compose_power(3) == Poly::one_minus_q_pow(6));
    CHECK(Poly::monomial(4).derivative() == Poly::monomial(3, 4));
}

TEST_CASE("division with remainder reconstructs the dividend") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, 7), b = random_poly(rng, 4);
        if (b.is_zero()) continue;
        Poly quot, rem;
        Poly::divmod(a, b, quot, rem);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < b.degree());
    }
    Poly q, r;
    CHECK_THROWS(Poly::divmod(Poly::monomial(2), Poly(), q, r));
}

TEST_CASE("gcd is monic and divides both arguments") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        Poly common = random_poly(rng, 2), a = random_poly(rng, 3) * common, b = random_poly(rng, 3) * common;
        if (a.is_zero() || b.is_zero()) continue;
        Poly g = Poly::gcd(a, b), quot, rem;
        CHECK(g.lead() == 1);
        Poly::divmod(a, g, quot, rem);
        CHECK(rem.is_zero());
        Poly::divmod(b, g, quot, rem);
        CHECK(rem.is_zero());
        if (common.degree() > 0) CHECK(g.degree() >= common.degree());
    }
}

TEST_CASE("1 - q^n factors into psi_d over divisors") {
    for (int n = 1; n <= 30; ++n) {
        Poly prod(Rational(1));
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * psi(d);
        CHECK(prod == Poly::one_minus_q_pow(n));
    }
    for (double q : {0.0, 0.3, 0.9})
        for (int d = 1; d <= 20; ++d) CHECK(psi(d).eval(q) > 0.0);
}

TEST_CASE("rational functions reduce to lowest terms") {
    RationalFunctionQ f(Poly::one_minus_q_pow(2), Poly::one_minus_q_pow(1));
    CHECK(f == RationalFunctionQ(Poly({Rational(1), Rational(1)})));
    CHECK(RationalFunctionQ::q_power(-2) * RationalFunctionQ::q_power(2) == RationalFunctionQ(1));
    CHECK(f.eval(Rational(1, 3)) == Rational(4, 3));
    CHECK((f - f).is_zero());
    CHECK((f / f) == RationalFunctionQ(1));
    CHECK(RationalFunctionQ(0).str() == "0");
}

TEST_CASE("field axioms on random rational functions") {
    std::mt19937 rng(3);
    for (int i = 0; i < 60; ++i) {
        Poly n1 = random_poly(rng, 3), d1 = random_poly(rng, 3), n2 = random_poly(rng, 3), d2 = random_poly(rng, 3);
        if (d1.is_zero() || d2.is_zero()) continue;
        RationalFunctionQ a(n1, d1), b(n2, d2);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * b == a * b + b * b);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("scalars keep their mode") {
    Scalar e(Rational(1, 2)), n(0.5);
    CHECK(e.mode() == Mode::Exact);
    CHECK(n.mode() == Mode::Numeric);
    CHECK_THROWS(e + n);
    CHECK((e * e).eval(Rational(7)) == Rational(1, 4));
    CHECK(Scalar(RationalFunctionQ::q_power(1)).eval(0.25) == doctest::Approx(0.25));
}
