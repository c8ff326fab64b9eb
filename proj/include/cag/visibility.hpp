#ifndef CAG_VISIBILITY_HPP
#define CAG_VISIBILITY_HPP

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "cag/polygon.hpp"
#include "cag/region.hpp"

namespace cag {

struct PointOutsidePolygon : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TargetNotOnBoundary : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True iff q is in the closed polygon (boundary included).
bool point_in_polygon(const Polygon& p, const Point& q);
bool point_on_boundary(const Polygon& p, const Point& q);

// Locates q on the boundary as a canonical BoundaryPoint, if it lies there.
std::optional<BoundaryPoint> locate_on_boundary(const Polygon& p, const Point& q);

// Closed visibility: true iff the segment [g, x] stays inside the closed
// polygon. Grazing contact with the boundary, including sight lines through
// reflex vertices, counts as visible. Throws PointOutsidePolygon.
bool sees(const Polygon& p, const Point& g, const Point& x);

// Maximal closed sub-intervals of edge `edge` (in the edge parameter s)
// visible from g, in increasing order; intervals may be single points.
std::vector<std::pair<Rational, Rational>> edge_visible_intervals(const Polygon& p,
                                                                  const Point& g, int edge);

struct Window {
    Segment chord;           // from the end of one visible run to the start of the next
    BoundaryPoint arc_start; // pocket arc runs clockwise from chord end...
    BoundaryPoint arc_end;   // ...back to the start of the next visible run
};

// Maximal visible boundary arcs from g, merged across edges, in clockwise
// order. full_boundary is set when g sees everything.
struct BoundaryVisibility {
    bool full_boundary = false;
    std::vector<BoundaryInterval> runs;
};

BoundaryVisibility visible_boundary_runs(const Polygon& p, const Point& g);

struct VisibilityPolygon {
    Region region;
    Point viewpoint;
    std::vector<Window> windows;
};

// Star-shaped region of all points visible from x. Throws PointOutsidePolygon.
VisibilityPolygon visibility_polygon(const Polygon& p, const Point& x);

struct Pocket {
    Region region;
    Window window;
};

// Connected components of P minus the visibility region, each with its window.
std::vector<Pocket> pockets(const Polygon& p, const VisibilityPolygon& vp);

// Guard targets: an explicit boundary interval or a finite set of boundary points.
using IntervalSpec = std::variant<BoundaryInterval, std::vector<BoundaryPoint>>;

// Per-polygon cache of vertex visibility polygons; the solver reuses these
// heavily across greedy steps.
class VisibilityCache {
public:
    explicit VisibilityCache(const Polygon& p) : poly_(p) {}
    const Region& vertex_region(int i);
    const Polygon& polygon() const { return poly_; }

private:
    const Polygon& poly_;
    std::map<int, Region> cache_;
};

// Intersection of the visibility regions of all spec targets (for an
// interval: endpoints plus every vertex strictly inside it).
Region feasible_region(const Polygon& p, const IntervalSpec& spec,
                       VisibilityCache* cache = nullptr);

// Witness point seeing the entire boundary, when one exists.
std::optional<Point> kernel_nonempty(const Polygon& p);

}  // namespace cag

#endif
