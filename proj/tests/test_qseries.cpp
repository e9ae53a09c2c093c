#include "suq2/qseries.hpp"

#include <doctest.h>

#include <cmath>

using namespace suq2;

TEST_CASE("Gaussian binomials: sum form equals product form") {
    for (int r = 0; r <= 10; ++r)
        for (int k = 0; k <= r; ++k) CHECK(qbinom(r, k) == qbinom_product(r, k));
    CHECK(qbinom(4, 2).eval(Rational(1)) == 6);
}

TEST_CASE("partial-fraction coefficients agree with the residues of the product") {
    for (int r = 1; r <= 8; ++r) {
        auto a = lambda_coeffs(r), b = lambda_residues(r);
        REQUIRE(a.size() == b.size());
        for (size_t l = 0; l < a.size(); ++l) CHECK(a[l] == b[l]);
        auto [prod, recomb] = lambda_recombination(r, Rational(1, 3));
        CHECK(prod == recomb);
    }
}

TEST_CASE("c0 + c1 vanishes identically") {
    for (int r = 1; r <= 10; ++r) {
        CHECK((c0(r) + c1(r)).is_zero());
        CHECK(c0(r) == c0_from_lambda(r));
        CHECK(c1(r) == c1_from_partial_fractions(r));
    }
}

TEST_CASE("assembled fractions") {
    CHECK(R(1) == RationalFunctionQ(Poly(Rational(3)), Poly({Rational(2), Rational(-2)})));
    for (int r = 1; r <= 4; ++r) CHECK(R(r) == R_printed(r));
    for (int r = 1; r <= 8; ++r) {
        auto a = theorem6_assembly(r);
        CHECK(a.g0_coeff.is_zero());
        CHECK(a.g_coeff == -RationalFunctionQ::q_power(-r));
        CHECK(poles_only_at_roots_of_unity(R(r)));
    }
}

TEST_CASE("G against its divisor-sum expansion") {
    for (double t : {0.1, 0.25, 0.5, 0.8}) {
        long double s = 0.0L, tn = 1.0L;
        for (int n = 1; n < 4000; ++n) {
            tn *= t;
            long sigma = 0;
            for (int d = 1; d <= n; ++d)
                if (n % d == 0) sigma += d;
            s += sigma * tn;
        }
        auto g = G(t, 1e-14);
        CHECK(g.value == doctest::Approx(static_cast<double>(s)).epsilon(1e-12));
        CHECK(g.tail_bound <= 1e-14);
    }
    CHECK_THROWS(G(1.0, 1e-10));
    CHECK_THROWS(G(0.5, 0.0));
}

TEST_CASE("log-derivative of eta") {
    for (double t : {0.1, 0.36, 0.6}) {
        auto e = eta_identity(t, 1e-14);
        CHECK(std::fabs(e.log_derivative - e.rhs_one_24th) < 1e-9);
        CHECK(std::fabs(e.log_derivative - e.rhs_one_12th) > 1e-3);
    }
}
