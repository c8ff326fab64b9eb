#ifndef CAG_SVG_HPP
#define CAG_SVG_HPP

#include <optional>
#include <string>

#include "cag/polygon.hpp"
#include "cag/region.hpp"
#include "cag/restricted.hpp"
#include "cag/solver.hpp"

namespace cag {

// Standalone SVG: polygon outline, colored chains, guard dots, dashed sight
// lines to chain endpoints. Pass nullptr for an outline-only drawing.
// Coordinates are converted to floating point only here, at the presentation
// layer.
std::string render_svg(const Polygon& p, const Solution* sol);

// Debug drawing of a region (feasible region, blocking polygon) inside p.
std::string render_region_svg(const Polygon& p, const Region& region);

}  // namespace cag

#endif
