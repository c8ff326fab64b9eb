#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cag/rational.hpp"

using namespace cag;

TEST_CASE("orientation of basic triples") {
    CHECK(orient(Point(0, 0), Point(1, 0), Point(0, 1)) == Orientation::CounterClockwise);
    CHECK(orient(Point(0, 0), Point(1, 1), Point(2, 2)) == Orientation::Collinear);
    CHECK(orient(Point(0, 0), Point(0, 1), Point(1, 1)) == Orientation::Clockwise);
}

TEST_CASE("orientation swap antisymmetry on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int trial = 0; trial < 500; ++trial) {
        Point p(d(rng), d(rng)), q(d(rng), d(rng)), r(d(rng), d(rng));
        Orientation a = orient(p, q, r);
        Orientation b = orient(p, r, q);
        if (a == Orientation::Collinear)
            CHECK(b == Orientation::Collinear);
        else
            CHECK(a != b);
    }
}

TEST_CASE("line intersections") {
    auto x = line_intersection(Point(0, 0), Point(2, 2), Point(0, 2), Point(2, 0));
    REQUIRE(x.has_value());
    CHECK(*x == Point(1, 1));

    // Slopes 0 and 1 meet at (-1, 0): solved by hand from the 2x2 system.
    auto y = line_intersection(Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 2));
    REQUIRE(y.has_value());
    CHECK(*y == Point(-1, 0));

    auto z = line_intersection(Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1));
    CHECK(!z.has_value());

    CHECK_THROWS_AS(line_intersection(Point(0, 0), Point(0, 0), Point(0, 1), Point(1, 1)),
                    std::invalid_argument);
}

TEST_CASE("intersection satisfies both line equations exactly") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-40, 40);
    int hits = 0;
    while (hits < 300) {
        Point a1(d(rng), d(rng)), a2(d(rng), d(rng)), b1(d(rng), d(rng)), b2(d(rng), d(rng));
        if (a1 == a2 || b1 == b2) continue;
        auto x = line_intersection(a1, a2, b1, b2);
        if (!x) continue;
        CHECK(cross(a1, a2, *x) == 0);
        CHECK(cross(b1, b2, *x) == 0);
        ++hits;
    }
}

TEST_CASE("parametric intersection matches the point form") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> d(-30, 30);
    int hits = 0;
    while (hits < 200) {
        Point a1(d(rng), d(rng)), a2(d(rng), d(rng)), c(d(rng), d(rng)), dpt(d(rng), d(rng));
        if (a1 == a2 || c == dpt) continue;
        auto t = line_intersection_param(a1, a2, c, dpt);
        auto x = line_intersection(a1, a2, c, dpt);
        CHECK(t.has_value() == x.has_value());
        if (!t) continue;
        CHECK(affine_combination(*t, c, dpt) == *x);
        ++hits;
    }
}

TEST_CASE("segment membership") {
    CHECK(segment_contains(Point(0, 0), Point(2, 0), Point(1, 0)));
    CHECK(!segment_contains(Point(0, 0), Point(2, 0), Point(3, 0)));
    CHECK(segment_contains(Point(0, 0), Point(2, 2), Point(1, 1)));
    CHECK(segment_contains(Point(0, 0), Point(2, 2), Point(0, 0)));
    CHECK(!segment_contains(Point(0, 0), Point(2, 2), Point(1, 2)));
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("0.8") == Rational(4, 5));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("2.24") == Rational(56, 25));
    CHECK(format_rational(Rational(3, 2)) == "3/2");
    CHECK(format_rational(Rational(-7)) == "-7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("parse-format round trip") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-100000, 100000);
    std::uniform_int_distribution<long> e(1, 100000);
    for (int i = 0; i < 500; ++i) {
        Rational r = make_rational(d(rng), e(rng));
        CHECK(parse_rational(format_rational(r)) == r);
    }
}

TEST_CASE("bit counts follow the integer size definition") {
    // <v> = 1 + ceil(log2(|v| + 1)).
    CHECK(integer_bits(0) == 1);
    CHECK(integer_bits(1) == 2);
    CHECK(integer_bits(-1) == 2);
    CHECK(integer_bits(3) == 3);
    CHECK(integer_bits(4) == 4);
    CHECK(integer_bits(7) == 4);
    CHECK(integer_bits(8) == 5);
    // 0/1 -> <0> + <1> = 1 + 2.
    CHECK(scalar_bits(Rational(0)) == 3);
    // 1/1 -> 2 * <1>.
    CHECK(scalar_bits(Rational(1)) == 2 * integer_bits(1));
    // 3/4 -> <3> + <4> = 3 + 4.
    CHECK(scalar_bits(Rational(3, 4)) == 7);
}

TEST_CASE("scalar-form intersection keeps bit growth additive in input size") {
    // Intersection of line(A, B) with line(C, D) where A = s*V + (1-s)*W:
    // the resulting parameter t on (C, D) gains at most c*N bits over s.
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> d(-512, 512);
    std::uniform_int_distribution<long> sn(-(1L << 20), 1L << 20);
    std::uniform_int_distribution<long> sd(1, 1L << 20);
    double worst_c = 0;
    int done = 0;
    while (done < 1000) {
        Point v(d(rng), d(rng)), w(d(rng), d(rng)), b(d(rng), d(rng)), c(d(rng), d(rng)),
            dd(d(rng), d(rng));
        if (v == w || c == dd) continue;
        Rational s = make_rational(sn(rng), sd(rng));
        Point a = affine_combination(s, v, w);
        if (a == b) continue;
        auto t = line_intersection_param(a, b, c, dd);
        if (!t) continue;
        std::size_t in_bits = std::max(integer_bits(s.get_num()), integer_bits(s.get_den()));
        std::size_t out_bits = std::max(integer_bits(t->get_num()), integer_bits(t->get_den()));
        std::size_t n_bits = 0;
        for (const Point* pt : {&v, &w, &b, &c, &dd})
            n_bits += scalar_bits(pt->x) + scalar_bits(pt->y);
        if (out_bits > in_bits) {
            double cc = double(out_bits - in_bits) / double(n_bits);
            worst_c = std::max(worst_c, cc);
        }
        ++done;
    }
    // The measured constant: the ten-factor coefficient products keep the
    // growth well below 2*N per intersection.
    CHECK(worst_c <= 2.0);
}
