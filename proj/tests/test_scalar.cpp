#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wq/scalar.hpp"
#include "wq/series.hpp"

using namespace wq;

TEST_CASE("field arithmetic examples") {
    GaussianRational one_plus_i(Rational(1), Rational(1));
    GaussianRational one_minus_i(Rational(1), Rational(-1));
    CHECK(one_plus_i * one_minus_i == GaussianRational(2));
    CHECK(GaussianRational::i().inv() == -GaussianRational::i());
    CHECK(GaussianRational(Rational(1, 2)) + GaussianRational(Rational(1, 3)) ==
          GaussianRational(Rational(5, 6)));
}

TEST_CASE("conj times self is real") {
    GaussianRational v(Rational(3, 7), Rational(-2, 5));
    GaussianRational n = v.conj() * v;
    CHECK(n.im() == 0);
    CHECK(n.re() == v.norm());
}

TEST_CASE("division by zero raises") {
    CHECK_THROWS_AS(GaussianRational(0).inv(), std::domain_error);
}

TEST_CASE("literal grammar round trip") {
    for (const char* text : {"0", "5", "-7", "1/2", "-3/4", "i", "-i", "2i", "-5/6i",
                             "1+i", "1-i", "1/2+3/4i", "-2-2i"}) {
        GaussianRational v = GaussianRational::parse(text);
        CHECK(GaussianRational::parse(v.str()) == v);
    }
    CHECK(GaussianRational::parse(" 1 + 2 i ") == GaussianRational(Rational(1), Rational(2)));
    CHECK_THROWS(GaussianRational::parse("1/0"));
    CHECK_THROWS(GaussianRational::parse("a"));
    CHECK_THROWS(GaussianRational::parse("1+2"));
}

TEST_CASE("exact square roots") {
    CHECK(*exact_sqrt(GaussianRational(4)) == GaussianRational(2));
    CHECK(*exact_sqrt(GaussianRational(-4)) == GaussianRational(Rational(0), Rational(2)));
    CHECK(*exact_sqrt(GaussianRational(Rational(9, 25))) == GaussianRational(Rational(3, 5)));
    // (1+i)^2 = 2i
    CHECK(*exact_sqrt(GaussianRational(Rational(0), Rational(2))) == GaussianRational(Rational(1), Rational(1)));
    CHECK(!exact_sqrt(GaussianRational(2)).has_value());
    CHECK(!exact_sqrt(GaussianRational(Rational(0), Rational(1))).has_value());
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            GaussianRational v{Rational(a), Rational(b)};
            auto r = exact_sqrt(v * v);
            REQUIRE(r.has_value());
            CHECK(*r * *r == v * v);
        }
}

TEST_CASE("rational series expansion examples") {
    RationalSeries simple({GaussianRational(1)}, {GaussianRational(1)});
    CHECK(simple.expand(2) == std::vector<GaussianRational>{GaussianRational(1), GaussianRational(0),
                                                            GaussianRational(0)});
    RationalSeries geo({GaussianRational(2)}, {GaussianRational(1), GaussianRational(1)});
    CHECK(geo.expand(2) == std::vector<GaussianRational>{GaussianRational(2), GaussianRational(-2),
                                                         GaussianRational(2)});
    RationalSeries zero({}, {GaussianRational(1)});
    CHECK(zero.expand(3) == std::vector<GaussianRational>(4, GaussianRational(0)));
}

TEST_CASE("series equality is cross-multiplicative") {
    // u^-1 / (1 + u^-2) equals (u^-1 + u^-3) / (1 + 2u^-2 + u^-4)
    RationalSeries a({GaussianRational(1)}, {GaussianRational(1), GaussianRational(1)});
    RationalSeries b({GaussianRational(1), GaussianRational(1)},
                     {GaussianRational(1), GaussianRational(2), GaussianRational(1)});
    CHECK(a == b);
    RationalSeries c({GaussianRational(1)}, {GaussianRational(1), GaussianRational(2)});
    CHECK(a != c);
    CHECK_THROWS(RationalSeries({}, {GaussianRational(2)}));
}
