#ifndef CAG_LAST_VISIBLE_HPP
#define CAG_LAST_VISIBLE_HPP

#include <optional>
#include <vector>

#include "cag/polygon.hpp"
#include "cag/region.hpp"
#include "cag/visibility.hpp"

namespace cag {

struct InconsistentInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateTangency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LastVisibleResult {
    BoundaryPoint point;                 // farthest guardable point on the failing edge
    Point guard;                         // region vertex achieving it
    std::optional<Point> blocking_vertex;  // polygon vertex limiting the view, when any
};

// Reference method: every region vertex is scanned for its reach along the
// failing edge (vertices of the feasible region see at least as far as the
// whole region). Preconditions: every point of `feasible` sees the edge's
// start vertex, none sees its end vertex.
LastVisibleResult last_visible_point_ref(const Polygon& p, const Region& feasible, int edge);

// Tangent lines through the failing edge's endpoints that pin the feasible
// region between the free and congested areas.
struct TangentFrame {
    Point t_r_touch;  // right tangent through v_{edge} touches F here
    Point t_m_touch;  // left tangent through v_{edge} touches F here
    Point t_l_touch;  // left tangent through v_{edge+1} touches F here
    Point q;          // intersection of t_l and t_m
};

std::optional<TangentFrame> tangent_frame(const Polygon& p, const Region& feasible, int edge);

enum class BlockingProvenance { BoundaryVertex, OnTangentLine, Synthetic };

struct BlockingPolygon {
    std::vector<Point> boundary;
    std::vector<BlockingProvenance> provenance;  // one tag per boundary vertex
};

// Traces the part of the polygon boundary inside the congested area into a
// simple polygon disjoint from the feasible region. Throws DegenerateTangency
// when no valid trace exists.
BlockingPolygon build_blocking_polygon(const Polygon& p, const Region& feasible, int edge);

// All lines tangent to both regions (each entirely inside one closed
// half-plane). Every line is reported once as a point pair.
std::vector<Segment> common_tangents(const Region& a, const std::vector<Point>& b);

// Tangent-based method; falls back to the reference method on degenerate
// tangency. Results are identical to last_visible_point_ref.
LastVisibleResult last_visible_point_tangent(const Polygon& p, const Region& feasible, int edge);

}  // namespace cag

#endif
