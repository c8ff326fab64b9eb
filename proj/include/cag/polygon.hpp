#ifndef CAG_POLYGON_HPP
#define CAG_POLYGON_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cag/rational.hpp"

namespace cag {

// Errors raised while validating a polygon.
struct PolygonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooFewVertices : PolygonError {
    using PolygonError::PolygonError;
};
struct DuplicateConsecutiveVertex : PolygonError {
    using PolygonError::PolygonError;
};
struct NotSimple : PolygonError {
    int edge_a;
    int edge_b;
    NotSimple(const std::string& msg, int a, int b) : PolygonError(msg), edge_a(a), edge_b(b) {}
};
struct MalformedNumber : PolygonError {
    using PolygonError::PolygonError;
};

// Simple polygon, stored in clockwise traversal order (negative signed area
// in y-up coordinates). Immutable after construction.
class Polygon {
public:
    // Validates and normalizes orientation to clockwise. Throws PolygonError
    // subclasses on invalid input. Collinear consecutive vertices are kept.
    explicit Polygon(std::vector<Point> vertices);

    int size() const { return static_cast<int>(verts_.size()); }
    const Point& vertex(int i) const { return verts_[index(i)]; }
    const std::vector<Point>& vertices() const { return verts_; }

    // Edge i runs from vertex(i) to vertex(i+1).
    Point edge_start(int i) const { return vertex(i); }
    Point edge_end(int i) const { return vertex(i + 1); }

    int index(int i) const {
        int n = static_cast<int>(verts_.size());
        int m = i % n;
        return m < 0 ? m + n : m;
    }

    // Twice the signed area of the stored (clockwise) polygon; negative.
    const Rational& twice_signed_area() const { return area2_; }

private:
    std::vector<Point> verts_;
    Rational area2_;
};

// Point on the boundary: the euclidean point is (1-s)*v[edge] + s*v[edge+1].
// Canonical form has s in [0,1); a polygon vertex is (its index, 0).
struct BoundaryPoint {
    int edge = 0;
    Rational s;

    BoundaryPoint() = default;
    BoundaryPoint(int e, Rational ss) : edge(e), s(std::move(ss)) {}

    bool operator==(const BoundaryPoint& o) const { return edge == o.edge && s == o.s; }
    bool operator!=(const BoundaryPoint& o) const { return !(*this == o); }
};

// Strict ordering usable as a map key (not the circular boundary order).
struct BoundaryPointKeyLess {
    bool operator()(const BoundaryPoint& a, const BoundaryPoint& b) const {
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.s < b.s;
    }
};

BoundaryPoint canonical_boundary_point(const Polygon& p, int edge, const Rational& s);
BoundaryPoint vertex_point(const Polygon& p, int i);
Point boundary_to_point(const Polygon& p, const BoundaryPoint& bp);

// Position along the boundary in edge units: edge + s, in [0, n).
Rational boundary_tau(const Polygon& p, const BoundaryPoint& bp);

// Clockwise arc length (in edge units) from a to b; in [0, n).
Rational arc_forward(const Polygon& p, const BoundaryPoint& a, const BoundaryPoint& b);

// Compares the clockwise positions of a and b as seen from origin.
std::strong_ordering boundary_cmp(const Polygon& p, const BoundaryPoint& origin,
                                  const BoundaryPoint& a, const BoundaryPoint& b);

enum class IntervalClosure { Closed, HalfOpenLeft, HalfOpenRight, Open };

// Clockwise boundary interval from start to end. start == end with Closed
// closure is the single point; with any other closure it is empty.
struct BoundaryInterval {
    BoundaryPoint start;
    BoundaryPoint end;
    IntervalClosure closure = IntervalClosure::Closed;
};

bool interval_contains(const Polygon& p, const BoundaryInterval& iv, const BoundaryPoint& q);

// Number of polygon edges whose intersection with the interval has positive length.
int edges_in_interval(const Polygon& p, const BoundaryInterval& iv);

// Exact segment relationship, shared by the simplicity check, visibility and
// the region overlay.
struct SegmentIntersection {
    enum class Kind { None, Point, Overlap } kind = Kind::None;
    // Parameters along the first segment a + t*(b-a); for Overlap t0 < t1.
    Rational t0, t1;
    Point p0, p1;
};

SegmentIntersection intersect_segments(const Point& a, const Point& b, const Point& c,
                                       const Point& d);

// Throws NotSimple / DuplicateConsecutiveVertex / TooFewVertices.
void validate_simple(const std::vector<Point>& verts);

// JSON document {"vertices": [[x, y], ...]}; coordinates are strings holding
// a rational "p/q" or a decimal literal, or plain JSON integers.
Polygon parse_polygon(const std::string& json_text);
std::string polygon_to_json(const Polygon& p);

}  // namespace cag

#endif
