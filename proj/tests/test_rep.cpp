#include "suq2/checks.hpp"
#include "suq2/parser.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace suq2;

TEST_CASE("level bases") {
    for (int N = 0; N <= 12; ++N) {
        CHECK(level_basis(N).size() == static_cast<size_t>((N + 1) * (N + 1)));
        CHECK(level_basis(N, Restriction::PSector).size() == static_cast<size_t>(N + 1));
        for (const auto& b : level_basis(N, Restriction::PSector)) CHECK(b.x == N);
    }
}

TEST_CASE("defining relations hold exactly at rational q") {
    for (Rational q : {Rational(0), Rational(1, 3), Rational(1, 2)}) {
        auto r = check_relations_exact(q, 10);
        CHECK(r.exact);
        CHECK(r.all_exact_zero);
    }
    CHECK(check_relations_formal(5).all_exact_zero);
}

TEST_CASE("defining relations hold numerically") {
    auto r = check_relations(0.7, 30);
    REQUIRE(r.max_residual.size() == 5);
    for (double v : r.max_residual) CHECK(v < 1e-12);
}

TEST_CASE("generator pieces are mutually adjoint") {
    Engine<NumericField> eng(NumericField(0.6, 1.0, 20));
    std::mt19937 rng(21);
    const char* pairs[][2] = {{"a", "a*"}, {"b", "b*"}, {"a b", "b* a*"}, {"a* b a", "a* b* a"}};
    for (auto [x, y] : pairs) {
        auto X = parse_operator(x), Y = parse_operator(y);
        for (int i = 0; i < 200; ++i) {
            std::uniform_int_distribution<int> lev(0, 8);
            int N = lev(rng), M = N + (static_cast<int>(rng() % 5) - 2);
            if (M < 0) continue;
            std::uniform_int_distribution<int> cx(0, N), cy(0, M);
            Basis v{N, cx(rng), cx(rng)}, w{M, cy(rng), cy(rng)};
            CHECK(eng.matrix_element(X, v, w) == doctest::Approx(eng.matrix_element(Y, w, v)).epsilon(1e-13));
        }
    }
}

TEST_CASE("Dirac operator is diagonal with the signed level") {
    Engine<NumericField> eng(NumericField(0.5));
    for (const auto& v : level_basis(6)) {
        double d = eng.diagonal(OperatorExpr::D(), v);
        CHECK(d == (v.x == v.N ? 6.0 : -6.0));
        CHECK(eng.diagonal(OperatorExpr::F() * OperatorExpr::F(), v) == 1.0);
    }
    Engine<NumericField> abs_eng(NumericField(0.5), true);
    CHECK(abs_eng.diagonal(OperatorExpr::D(), Basis{4, 1, 2}) == 4.0);
}

TEST_CASE("bounded commutators with D at q = 0") {
    // [D, a] maps level N to N +/- 1 and its entries stay bounded
    Engine<NumericField> eng(NumericField(0.0));
    double worst = 0.0;
    for (const char* w : {"a", "a*", "b", "b*"}) {
        auto c = dcomm(parse_operator(w));
        for (int N = 0; N <= 25; ++N)
            for (const auto& v : level_basis(N))
                for (const auto& [t, x] : eng.apply(c, v)) worst = std::max(worst, std::fabs(x));
    }
    CHECK(worst <= 2.0 + 1e-12);
}

TEST_CASE("exact and numeric engines agree") {
    Engine<RationalField> ex(rational_field(Rational(1, 3)));
    Engine<NumericField> nu(NumericField(1.0 / 3.0));
    auto op = parse_operator("a* b a + b* b b* b - a a*");
    for (int N = 0; N <= 6; ++N)
        for (const auto& v : level_basis(N)) {
            auto a = ex.apply(op, v);
            auto b = nu.apply(op, v);
            REQUIRE(a.size() == b.size());
            for (size_t i = 0; i < a.size(); ++i) {
                CHECK(a[i].first == b[i].first);
                CHECK(a[i].second.to_double() == doctest::Approx(b[i].second).epsilon(1e-12));
            }
        }
}

TEST_CASE("quantum group equivariance") {
    for (double q : {0.3, 0.5, 0.8}) CHECK(check_equivariance(q, 10).max() < 1e-12);
}

TEST_CASE("Hopf action on the vacuum") {
    for (double q : {0.3, 0.5, 0.8}) {
        auto v = vacuum_test(q);
        CHECK(v.rows.size() == 6);
        CHECK(v.max_residual < 1e-12);
    }
}

TEST_CASE("torus phases") {
    CHECK(torus_phase({3, 3, 0}, 1.0, 0.0) == doctest::Approx(0.0));
    CHECK(torus_phase({3, 1, 1}, 0.5, 0.25) == doctest::Approx(0.5));
}
