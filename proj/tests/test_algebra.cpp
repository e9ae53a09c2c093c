#include "suq2/parser.hpp"

#include <doctest.h>

#include <random>

using namespace suq2;

namespace {

AlgebraElement random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), len(0, 3), letter(0, 3), coef(-4, 4);
    const Letter ls[] = {Letter::A, Letter::As, Letter::B, Letter::Bs};
    AlgebraElement x(Mode::Exact);
    for (int t = nterms(rng); t > 0; --t) {
        Word w;
        for (int i = len(rng); i > 0; --i) w.push_back(ls[letter(rng)]);
        Rational c(coef(rng), 1 + t);
        c.canonicalize();
        x.add(w, Scalar(c));
    }
    return x;
}

}  // namespace

TEST_CASE("words and degrees") {
    Word w{Letter::As, Letter::B, Letter::B, Letter::A, Letter::A};
    CHECK(bidegree(w) == std::make_pair(1, 2));
    CHECK(del_degree(w) == 1);
    CHECK(word_str(w) == "a* b^2 a^2");
    CHECK(adjoint(adjoint(w)) == w);
    CHECK(bidegree(adjoint(w)) == std::make_pair(-1, -2));
}

TEST_CASE("parser basics") {
    CHECK(parse_element("a a*").str() == "a a*");
    CHECK(parse_element("2 a - a").str() == "a");
    CHECK(parse_element("(a + b)^2") == parse_element("a a + a b + b a + b b"));
    CHECK(parse_element("a^3") == parse_element("a a a"));
    CHECK(parse_element("1/2 b*") == AlgebraElement(Word{Letter::Bs}, Scalar(Rational(1, 2))));
    CHECK(parse_element("0.25 a", Mode::Exact) == AlgebraElement(Word{Letter::A}, Scalar(Rational(1, 4))));
    CHECK(parse_element("a - a").is_zero());
    CHECK(parse_element("010 a") == parse_element("10 a"));
    CHECK(parse_element("0.08 a") == parse_element("2/25 a"));
    CHECK(std::holds_alternative<OperatorExpr>(parse("a D(b)")));
    CHECK(std::holds_alternative<AlgebraElement>(parse("a* b")));
}

TEST_CASE("parser errors carry byte offsets") {
    try {
        parse_element("a + x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
    CHECK_THROWS_AS(parse_element("a +"), ParseError);
    CHECK_THROWS_AS(parse_element("(a b"), ParseError);
    CHECK_THROWS_AS(parse_operator("D a"), ParseError);
    CHECK_THROWS(parse_element("F a"));
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto x = random_element(rng);
        CHECK(parse_element(x.str()) == x);
    }
}

TEST_CASE("adjoint is an antilinear anti-homomorphism") {
    std::mt19937 rng(9);
    for (int i = 0; i < 100; ++i) {
        auto x = random_element(rng), y = random_element(rng);
        CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
        CHECK(x.adjoint().adjoint() == x);
        CHECK((x + y).adjoint() == x.adjoint() + y.adjoint());
    }
}

TEST_CASE("multiplication is associative and distributive") {
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("circle symbol") {
    CHECK(sigma(parse_element("a")) == LaurentPoly::monomial(1, Scalar(1)));
    CHECK(sigma(parse_element("a*")) == LaurentPoly::monomial(-1, Scalar(1)));
    CHECK(sigma(parse_element("b")).coeffs().empty());
    CHECK(sigma(parse_element("a* a + b* b")) == LaurentPoly::monomial(0, Scalar(1)));
    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
        auto x = random_element(rng), y = random_element(rng);
        CHECK(sigma(x * y) == sigma(x) * sigma(y));
    }
}

TEST_CASE("circle integrals") {
    auto u = sigma(parse_element("a")), ubar = sigma(parse_element("a*"));
    CHECK(circle_mean({u, ubar}, {0, 0}) == doctest::Approx(1.0));
    CHECK(circle_mean({u}, {0}) == doctest::Approx(0.0));
    // (1/2pi i) int u* d(u) = 1
    CHECK(circle_mean_over_i({ubar, u}, {0, 1}) == doctest::Approx(1.0));
    CHECK(circle_mean({ubar, u}, {0, 2}) == doctest::Approx(-1.0));
    CHECK(circle_mean({u.derivative_over_i(2), ubar}, {0, 0}) == doctest::Approx(1.0));
}
