#ifndef CAG_RESTRICTED_HPP
#define CAG_RESTRICTED_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "cag/polygon.hpp"
#include "cag/solver.hpp"

namespace cag {

struct Uncoverable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Circular arc of the boundary with a guard that sees all of it.
struct Arc {
    BoundaryInterval interval;
    Point guard;
};

enum class RestrictedMode { IntervalVertexRestricted, GuardVertexRestricted };

struct RestrictedSolution {
    std::vector<Arc> chains;
    int size = 0;
    RestrictedMode mode;
};

// Minimum-cardinality subset of arcs covering the whole boundary. Dominated
// arcs are pruned, then a greedy sweep runs from every undominated start.
// Throws Uncoverable when the union misses part of the boundary.
std::vector<Arc> circle_cover_min(const Polygon& p, const std::vector<Arc>& arcs);

// Chains restricted to start and end at polygon vertices.
RestrictedSolution solve_interval_restricted(const Polygon& p);

// Guards restricted to polygon vertices.
RestrictedSolution solve_guard_restricted(const Polygon& p);

std::string restricted_to_json(const Polygon& p, const RestrictedSolution& s);

}  // namespace cag

#endif
