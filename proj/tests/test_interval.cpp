#include "ostrowski/interval.hpp"

#include "ostrowski/cfrac.hpp"
#include "ostrowski/literal.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace ostrowski;
using namespace ostrowski::testing;

TEST_CASE("interval_floor decides separated enclosures") {
    IntervalReal a(Rational(61, 100), Rational(62, 100));
    auto fa = interval_floor(a, 0);
    REQUIRE(std::holds_alternative<Int>(fa));
    CHECK(std::get<Int>(fa) == 0);

    IntervalReal b(Rational(99, 100), Rational(101, 100));
    CHECK(std::holds_alternative<Undecided>(interval_floor(b, 0)));

    // convergent interval [3/5, 2/3] of the golden section
    IntervalReal c(Rational(3, 5), Rational(2, 3));
    CHECK(std::get<Int>(interval_floor(c, 0)) == 0);

    IntervalReal d(Rational(-5, 2), Rational(-9, 4));
    CHECK(std::get<Int>(interval_floor(d, 0)) == -3);
    CHECK(std::get<Int>(interval_ceil(d, 0)) == -2);
}

TEST_CASE("interval_floor agrees with floor_exact on exact enclosures") {
    auto gen = rng(3);
    std::uniform_int_distribution<long> coeff(-40, 40);
    std::uniform_int_distribution<long> denom(1, 9);
    for (int i = 0; i < 200; ++i) {
        Real x = Real::quadratic(coeff(gen), coeff(gen), 7, denom(gen));
        auto f = interval_floor(IntervalReal::exact(x), 4);
        REQUIRE(std::holds_alternative<Int>(f));
        CHECK(std::get<Int>(f) == x.floor());
    }
    // rational point enclosures, including exact integers
    CHECK(std::get<Int>(interval_floor(IntervalReal::exact(Rational(4)), 0)) ==
          4);
    CHECK(std::get<Int>(interval_floor(IntervalReal::exact(Rational(-7, 2)),
                                       0)) == -4);
}

TEST_CASE("refinement tightens alpha enclosures and never widens") {
    auto spec = parse_alpha_spec("cf:[;1]");
    auto ctx = AlphaContext::make(spec);
    IntervalReal a = ctx->alpha_enclosure();
    Rational width = a.width();
    for (int i = 0; i < 10; ++i) {
        Rational lo = a.lower(), hi = a.upper();
        REQUIRE(a.refine());
        CHECK(a.lower() >= lo);
        CHECK(a.upper() <= hi);
        CHECK(a.width() < width);
        width = a.width();
    }
    // the enclosure keeps containing the golden section
    Real phi = golden();
    Real rlo = Real::rational(boost::multiprecision::numerator(a.lower()),
                              boost::multiprecision::denominator(a.lower()));
    Real rhi = Real::rational(boost::multiprecision::numerator(a.upper()),
                              boost::multiprecision::denominator(a.upper()));
    CHECK((phi - rlo).sign() > 0);
    CHECK((rhi - phi).sign() > 0);
}

TEST_CASE("finite digit supply exhausts refinement") {
    auto spec = parse_alpha_spec("cf:[1,1,1,1]");
    auto ctx = AlphaContext::make(spec);
    IntervalReal a = ctx->alpha_enclosure();
    int improvements = 0;
    while (a.refine()) ++improvements;
    CHECK(improvements <= 4);
    CHECK_FALSE(a.refine());  // stays exhausted
}

TEST_CASE("interval arithmetic combinators refine through operands") {
    auto ctx = AlphaContext::make(parse_alpha_spec("cf:[;2]"));  // sqrt(2)-1
    IntervalReal a = ctx->alpha_enclosure();
    IntervalReal s = a + a;
    IntervalReal p = a * a;
    IntervalReal d = IntervalReal::exact(Rational(1)) - a;
    Rational sw = s.width(), pw = p.width(), dw = d.width();
    REQUIRE(s.refine());
    REQUIRE(p.refine());
    REQUIRE(d.refine());
    CHECK(s.width() < sw);
    CHECK(p.width() < pw);
    CHECK(d.width() < dw);
    // alpha^2 = 3 - 2*sqrt(2) stays enclosed
    Real exact_sq = sqrt2m1() * sqrt2m1();
    Real plo = Real::rational(boost::multiprecision::numerator(p.lower()),
                              boost::multiprecision::denominator(p.lower()));
    CHECK((exact_sq - plo).sign() > 0);
}

TEST_CASE("interval division demands a sign-definite denominator") {
    IntervalReal num(Rational(1), Rational(1));
    IntervalReal bad(Rational(-1, 2), Rational(1, 2));
    CHECK_THROWS_AS(interval_div(num, bad, 2), Error);
    IntervalReal good(Rational(1, 3), Rational(1, 2));
    IntervalReal q = interval_div(num, good, 2);
    CHECK(q.lower() == Rational(2));
    CHECK(q.upper() == Rational(3));
}
