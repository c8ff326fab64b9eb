#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cag/region.hpp"
#include "fixtures.hpp"

using namespace cag;

namespace {

Region unit_square_at(long x, long y) {
    return Region::from_area(
        {Point(x, y), Point(x + 1, y), Point(x + 1, y + 1), Point(x, y + 1)});
}

}  // namespace

TEST_CASE("edge-contact intersection degenerates to a segment") {
    Region a = unit_square_at(0, 0);
    Region b = unit_square_at(1, 0);
    Region x = intersect(a, b);
    CHECK(x.kind() == RegionKind::SegmentChain);
    REQUIRE(x.segments().size() == 1);
    Segment s = x.segments()[0];
    CHECK(((s.a == Point(1, 0) && s.b == Point(1, 1)) ||
           (s.a == Point(1, 1) && s.b == Point(1, 0))));
}

TEST_CASE("corner-contact intersection degenerates to a point") {
    Region a = unit_square_at(0, 0);
    Region b = unit_square_at(1, 1);
    Region x = intersect(a, b);
    CHECK(x.kind() == RegionKind::SinglePoint);
    REQUIRE(x.points().size() == 1);
    CHECK(x.points()[0] == Point(1, 1));
}

TEST_CASE("disjoint squares intersect to nothing") {
    Region x = intersect(unit_square_at(0, 0), unit_square_at(3, 3));
    CHECK(x.kind() == RegionKind::Empty);
    CHECK(x.is_empty());
}

TEST_CASE("triangle against its mirror image") {
    // Triangle (0,0),(2,0),(1,2) against its reflection over y=1: the
    // half-plane clipping oracle yields the quadrilateral
    // (1,0),(3/2,1),(1,2),(1/2,1) because opposite sides are parallel.
    Region t1 = Region::from_area({Point(0, 0), Point(2, 0), Point(1, 2)});
    Region t2 = Region::from_area({Point(0, 2), Point(2, 2), Point(1, 0)});
    Region x = intersect(t1, t2);
    CHECK(x.kind() == RegionKind::Area);
    REQUIRE(x.areas().size() == 1);
    CHECK(x.areas()[0].size() == 4);
    for (const Point& expect :
         {Point(1, 0), Point(Rational(3, 2), Rational(1)), Point(1, 2),
          Point(Rational(1, 2), Rational(1))}) {
        bool found = false;
        for (const Point& v : x.areas()[0])
            if (v == expect) found = true;
        CHECK(found);
    }
    // A genuinely hexagonal case: equilateral-style star with non-parallel sides.
    Region s1 = Region::from_area({Point(0, 0), Point(4, 0), Point(2, 3)});
    Region s2 = Region::from_area({Point(0, 2), Point(4, 2), Point(2, -1)});
    Region y = intersect(s1, s2);
    CHECK(y.kind() == RegionKind::Area);
    REQUIRE(y.areas().size() == 1);
    CHECK(y.areas()[0].size() == 6);
}

TEST_CASE("identical and nested operands") {
    Region sq = unit_square_at(0, 0);
    Region same = intersect(sq, sq);
    CHECK(same.kind() == RegionKind::Area);
    CHECK(same.twice_area() == sq.twice_area());

    Region big = Region::from_area({Point(-2, -2), Point(3, -2), Point(3, 3), Point(-2, 3)});
    Region nested = intersect(sq, big);
    CHECK(nested.twice_area() == sq.twice_area());
    Region nested2 = intersect(big, sq);
    CHECK(nested2.twice_area() == sq.twice_area());
}

TEST_CASE("overlapping squares intersect to the shared rectangle") {
    Region a = Region::from_area({Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)});
    Region b = Region::from_area({Point(2, 2), Point(6, 2), Point(6, 6), Point(2, 6)});
    Region x = intersect(a, b);
    CHECK(x.kind() == RegionKind::Area);
    CHECK(x.twice_area() == 8);  // 2x2 square
}

TEST_CASE("intersection membership matches both operands on random probes") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> c(-2, 8);
    std::uniform_int_distribution<long> denom(1, 4);
    // Non-convex L against a rotated square.
    Region a = Region::from_area({Point(0, 0), Point(6, 0), Point(6, 2), Point(2, 2),
                                  Point(2, 6), Point(0, 6)});
    Region b = Region::from_area({Point(1, -2), Point(7, 1), Point(4, 7), Point(-2, 4)});
    Region x = intersect(a, b);
    for (int trial = 0; trial < 400; ++trial) {
        Point q(Rational(c(rng), denom(rng)), Rational(c(rng), denom(rng)));
        CHECK(x.contains(q) == (a.contains(q) && b.contains(q)));
    }
}

TEST_CASE("segment and point pieces intersect exactly") {
    Region area = unit_square_at(0, 0);
    Region seg = Region::from_segments({Segment{Point(-1, Rational(1, 2)), Point(2, Rational(1, 2))}});
    Region x = intersect(seg, area);
    CHECK(x.kind() == RegionKind::SegmentChain);
    REQUIRE(x.segments().size() == 1);
    CHECK(segment_contains(x.segments()[0].a, x.segments()[0].b, Point(Rational(1, 2), Rational(1, 2))));

    // Segment grazing a corner produces a point.
    Region diag = Region::from_segments({Segment{Point(-1, 1), Point(1, -1)}});
    Region y = intersect(diag, area);
    CHECK(y.kind() == RegionKind::SinglePoint);
    CHECK(y.points()[0] == Point(0, 0));

    // Segment x segment: crossing point and collinear overlap.
    Region s1 = Region::from_segments({Segment{Point(0, 0), Point(4, 4)}});
    Region s2 = Region::from_segments({Segment{Point(0, 4), Point(4, 0)}});
    CHECK(intersect(s1, s2).kind() == RegionKind::SinglePoint);
    Region s3 = Region::from_segments({Segment{Point(2, 2), Point(6, 6)}});
    Region z = intersect(s1, s3);
    CHECK(z.kind() == RegionKind::SegmentChain);
    CHECK(z.segments()[0].a == Point(2, 2));
    CHECK(z.segments()[0].b == Point(4, 4));

    // Points against regions.
    Region pt = Region::single_point(Point(1, 1));
    CHECK(intersect(pt, area).kind() == RegionKind::SinglePoint);
    CHECK(intersect(pt, Region::single_point(Point(0, 0))).is_empty());
}

TEST_CASE("vertex counts follow the region kind") {
    CHECK(region_vertex_count(Region::empty()) == 0);
    CHECK(region_vertex_count(Region::single_point(Point(1, 2))) == 0);
    CHECK(region_vertex_count(unit_square_at(0, 0)) == 4);
    Region segs = Region::from_segments({Segment{Point(0, 0), Point(1, 0)}});
    CHECK(region_vertex_count(segs) == 2);
}

TEST_CASE("normalization merges touching collinear segments and absorbs points") {
    Region r = Region::from_segments(
        {Segment{Point(0, 0), Point(1, 0)}, Segment{Point(1, 0), Point(2, 0)}});
    CHECK(r.segments().size() == 1);
    CHECK(r.segments()[0].a == Point(0, 0));
    CHECK(r.segments()[0].b == Point(2, 0));

    Region mix;
    mix.add_area({Point(0, 0), Point(2, 0), Point(2, 2), Point(0, 2)});
    mix.add_point(Point(1, 1));  // covered by the area
    mix.add_segment({Point(0, 0), Point(1, 1)});  // inside the area
    mix.normalize();
    CHECK(mix.kind() == RegionKind::Area);
    CHECK(mix.points().empty());
    CHECK(mix.segments().empty());
}

TEST_CASE("connectivity check distinguishes touching from separated pieces") {
    Region connected;
    connected.add_area({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});
    connected.add_segment({Point(1, 1), Point(2, 2)});
    CHECK(region_is_connected(connected));

    Region split;
    split.add_area({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});
    split.add_point(Point(5, 5));
    CHECK(!region_is_connected(split));
}
