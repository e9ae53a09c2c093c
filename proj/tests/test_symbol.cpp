#include "suq2/parser.hpp"
#include "suq2/symbol.hpp"

#include <doctest.h>

#include <cmath>

using namespace suq2;

namespace {

Word word_of(const char* s) { return parse_element(s).terms().begin()->first; }

}  // namespace

TEST_CASE("generators split into raising and lowering pieces") {
    auto parts = decompose(word_of("a b*"));
    CHECK(parts.size() == 4);
    for (const auto& bw : parts) CHECK(bw.size() == 2);
    CHECK(geodesic_degree({{Letter::A, true}, {Letter::B, true}}) == 2);
    CHECK(geodesic_degree({{Letter::A, true}, {Letter::As, false}}) == 0);
}

TEST_CASE("disk representation") {
    const double q = 0.5;
    auto a = disk_apply(word_of("a"), Disk::Plus, 3, q);
    REQUIRE(a);
    CHECK(a->first == 2);
    CHECK(a->second == doctest::Approx(std::sqrt(1 - std::pow(q, 6))));
    auto as = disk_apply(word_of("a*"), Disk::Plus, 3, q);
    REQUIRE(as);
    CHECK(as->first == 4);
    CHECK(as->second == doctest::Approx(std::sqrt(1 - std::pow(q, 8))));
    auto b = disk_apply(word_of("b"), Disk::Plus, 2, q), bm = disk_apply(word_of("b"), Disk::Minus, 2, q);
    REQUIRE(b);
    REQUIRE(bm);
    CHECK(std::fabs(b->second) == doctest::Approx(q * q));
    CHECK(b->second == doctest::Approx(-bm->second));
    auto low = disk_apply(word_of("a"), Disk::Plus, 0, q);
    CHECK((!low || low->second == 0.0));
}

TEST_CASE("disk relations hold on every vector") {
    for (double q : {0.0, 0.4, 0.9})
        for (Disk d : {Disk::Plus, Disk::Minus})
            for (long x = 0; x < 30; ++x) {
                // a* a + b* b = 1
                double s = 0.0;
                for (const char* w : {"a* a", "b* b"}) {
                    auto r = disk_apply(word_of(w), d, x, q);
                    if (r) {
                        CHECK(r->first == x);
                        s += r->second;
                    }
                }
                CHECK(s == doctest::Approx(1.0));
            }
}

TEST_CASE("tau1 is the circle mean of the symbol") {
    CHECK(tau1(word_of("a a*")) == 1.0);
    CHECK(tau1(word_of("a* a* a a")) == 1.0);
    CHECK(tau1(word_of("a")) == 0.0);
    CHECK(tau1(word_of("a b* b a*")) == 0.0);
    CHECK(tau1({}) == 1.0);
}

TEST_CASE("tau0 as the regularized disk trace") {
    for (double q : {0.3, 0.5, 0.8}) {
        CHECK(tau0({}, Disk::Minus, q).value == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::fabs(tau0(word_of("b"), Disk::Minus, q).value) == doctest::Approx(1 / (1 - q)).epsilon(1e-10));
        CHECK(tau0(word_of("b* b"), Disk::Plus, q).value == doctest::Approx(1 / (1 - q * q)).epsilon(1e-10));
        CHECK(tau0(word_of("a* a"), Disk::Minus, q).value == doctest::Approx(1 - 1 / (1 - q * q)).epsilon(1e-10));
    }
}

TEST_CASE("symbol map respects adjoints and products") {
    const double q = 0.5;
    const char* ws[] = {"a", "a*", "b", "b*", "a b", "b* a*", "a* b a"};
    for (const char* x : ws) {
        auto rx = rho(parse_element(x), q);
        CHECK(rho(parse_element(x).adjoint(), q).str() == rx.adjoint().str());
        for (const char* y : ws) {
            auto lhs = rho(parse_element(x) * parse_element(y), q), rhs = rx * rho(parse_element(y), q);
            CHECK(degree0(lhs).str() == degree0(rhs).str());
        }
    }
}

TEST_CASE("the symbol approximates the operator up to smoothing terms") {
    for (double q : {0.3, 0.5})
        for (const char* w : {"a", "b", "a* b a"}) {
            auto r = smoothing_check(parse_element(w), q, 60);
            INFO(w, " at q = ", q, " slope ", r.slope);
            CHECK(r.pass);
        }
}

TEST_CASE("residues through the symbol pairing") {
    for (double q : {0.3, 0.8}) {
        ZetaContext ctx;
        ctx.q = q;
        for (const char* w : {"1", "b* b", "a* a", "a b b* a*"}) {
            auto r = theorem4_check(parse_element(w), ctx);
            INFO(w, " at q = ", q);
            CHECK(r.ok);
            CHECK(r.max_deviation < 1e-8);
        }
    }
}
