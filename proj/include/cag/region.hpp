#ifndef CAG_REGION_HPP
#define CAG_REGION_HPP

#include <optional>
#include <vector>

#include "cag/polygon.hpp"
#include "cag/rational.hpp"

namespace cag {

enum class RegionKind { Empty, SinglePoint, SegmentChain, Area };

struct Segment {
    Point a;
    Point b;
};

// Possibly degenerate closed point set: a union of weakly-simple area pieces,
// line segments, and isolated points. Feasible regions and visibility
// polygons live here; intersections keep lower-dimensional parts instead of
// dropping them.
class Region {
public:
    Region() = default;

    static Region empty() { return Region(); }
    static Region single_point(Point p);
    static Region from_segments(std::vector<Segment> segs);
    // Vertex loop of an area piece; orientation is normalized to clockwise.
    static Region from_area(std::vector<Point> loop);
    static Region from_polygon(const Polygon& p);

    RegionKind kind() const;
    bool is_empty() const;

    const std::vector<std::vector<Point>>& areas() const { return areas_; }
    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<Point>& points() const { return points_; }

    bool contains(const Point& q) const;

    // Area-piece corners, segment endpoints and isolated points, deduplicated.
    std::vector<Point> all_vertices() const;

    // Twice the total enclosed area.
    Rational twice_area() const;

    void add_area(std::vector<Point> loop);
    void add_segment(const Segment& s);
    void add_point(const Point& p);
    // Drops pieces covered by higher-dimensional pieces, merges segments.
    void normalize();

private:
    std::vector<std::vector<Point>> areas_;
    std::vector<Segment> segments_;
    std::vector<Point> points_;
};

// Number of boundary vertices: 0 for Empty and SinglePoint, distinct segment
// endpoints for chains, total corner count for areas.
int region_vertex_count(const Region& r);

// Exact set intersection, including lower-dimensional contact results.
Region intersect(const Region& a, const Region& b);

// True iff q is inside or on the boundary of the (weakly simple) loop.
bool point_in_loop(const std::vector<Point>& loop, const Point& q);
bool point_on_loop_boundary(const std::vector<Point>& loop, const Point& q);

Rational loop_twice_area(const std::vector<Point>& loop);

// True iff every piece of the region is connected to the others through
// shared points (used by the connectivity invariant checks).
bool region_is_connected(const Region& r);

}  // namespace cag

#endif
