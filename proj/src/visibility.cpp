#include "cag/visibility.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cag {

bool point_on_boundary(const Polygon& p, const Point& q) {
    int n = p.size();
    for (int i = 0; i < n; ++i)
        if (segment_contains(p.vertex(i), p.vertex(i + 1), q)) return true;
    return false;
}

bool point_in_polygon(const Polygon& p, const Point& q) {
    return point_in_loop(p.vertices(), q);
}

std::optional<BoundaryPoint> locate_on_boundary(const Polygon& p, const Point& q) {
    int n = p.size();
    for (int i = 0; i < n; ++i) {
        const Point& a = p.vertex(i);
        const Point& b = p.vertex(i + 1);
        if (!segment_contains(a, b, q)) continue;
        Rational s;
        if (a.x != b.x)
            s = (q.x - a.x) / (b.x - a.x);
        else
            s = (q.y - a.y) / (b.y - a.y);
        return canonical_boundary_point(p, i, s);
    }
    return std::nullopt;
}

bool sees(const Polygon& p, const Point& g, const Point& x) {
    if (!point_in_polygon(p, g))
        throw PointOutsidePolygon("guard " + format_point(g) + " lies outside the polygon");
    if (!point_in_polygon(p, x))
        throw PointOutsidePolygon("target " + format_point(x) + " lies outside the polygon");
    if (g == x) return true;
    // Split [g,x] at every boundary contact; the open pieces between contacts
    // are entirely inside or entirely outside, decided at their midpoints.
    std::vector<Rational> cuts{Rational(0), Rational(1)};
    int n = p.size();
    for (int i = 0; i < n; ++i) {
        SegmentIntersection s = intersect_segments(g, x, p.vertex(i), p.vertex(i + 1));
        if (s.kind == SegmentIntersection::Kind::Point) {
            cuts.push_back(s.t0);
        } else if (s.kind == SegmentIntersection::Kind::Overlap) {
            cuts.push_back(s.t0);
            cuts.push_back(s.t1);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    Point d = x - g;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational tm = (cuts[i] + cuts[i + 1]) / 2;
        Point m{g.x + tm * d.x, g.y + tm * d.y};
        if (!point_in_polygon(p, m)) return false;
    }
    return true;
}

std::vector<std::pair<Rational, Rational>> edge_visible_intervals(const Polygon& p,
                                                                  const Point& g, int edge) {
    const Point a = p.vertex(edge);
    const Point b = p.vertex(edge + 1);
    if (segment_contains(a, b, g)) return {{Rational(0), Rational(1)}};

    std::vector<Rational> criticals{Rational(0), Rational(1)};
    int n = p.size();
    if (orient(a, b, g) == Orientation::Collinear) {
        // Viewpoint on the edge's line but off the segment: visibility flips
        // where other edges touch the sight line.
        Point far = dist2(g, a) >= dist2(g, b) ? a : b;
        for (int j = 0; j < n; ++j) {
            SegmentIntersection s = intersect_segments(g, far, p.vertex(j), p.vertex(j + 1));
            auto to_edge_param = [&](const Point& q) -> std::optional<Rational> {
                Rational sp;
                if (a.x != b.x)
                    sp = (q.x - a.x) / (b.x - a.x);
                else if (a.y != b.y)
                    sp = (q.y - a.y) / (b.y - a.y);
                else
                    return std::nullopt;
                if (sp > 0 && sp < 1) return sp;
                return std::nullopt;
            };
            if (s.kind == SegmentIntersection::Kind::Point) {
                if (auto sp = to_edge_param(s.p0)) criticals.push_back(*sp);
            } else if (s.kind == SegmentIntersection::Kind::Overlap) {
                if (auto sp = to_edge_param(s.p0)) criticals.push_back(*sp);
                if (auto sp = to_edge_param(s.p1)) criticals.push_back(*sp);
            }
        }
    } else {
        // Visibility changes only where the sight ray sweeps past a vertex.
        for (int j = 0; j < n; ++j) {
            const Point& w = p.vertex(j);
            if (w == g) continue;
            Rational ca = cross(g, w, a);
            Rational cb = cross(g, w, b);
            if (ca == cb) continue;  // line(g,w) parallel to the edge
            Rational s = ca / (ca - cb);
            if (s > 0 && s < 1) criticals.push_back(s);
        }
    }
    std::sort(criticals.begin(), criticals.end());
    criticals.erase(std::unique(criticals.begin(), criticals.end()), criticals.end());

    Point d = b - a;
    auto at = [&](const Rational& s) { return Point{a.x + s * d.x, a.y + s * d.y}; };
    int m = static_cast<int>(criticals.size());
    std::vector<bool> point_vis(m);
    std::vector<bool> gap_vis(m - 1);
    for (int i = 0; i < m; ++i) point_vis[i] = sees(p, g, at(criticals[i]));
    for (int i = 0; i + 1 < m; ++i) {
        Rational mid = (criticals[i] + criticals[i + 1]) / 2;
        gap_vis[i] = sees(p, g, at(mid));
        if (gap_vis[i] && !(point_vis[i] && point_vis[i + 1]))
            throw std::logic_error("visible open run with invisible endpoint");
    }

    std::vector<std::pair<Rational, Rational>> out;
    int i = 0;
    while (i < m) {
        if (!point_vis[i]) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < m && gap_vis[j] && point_vis[j + 1]) ++j;
        out.emplace_back(criticals[i], criticals[j]);
        i = j + 1;
    }
    return out;
}

BoundaryVisibility visible_boundary_runs(const Polygon& p, const Point& g) {
    if (!point_in_polygon(p, g))
        throw PointOutsidePolygon("viewpoint " + format_point(g) + " lies outside the polygon");
    BoundaryVisibility out;
    int n = p.size();
    struct Run {
        BoundaryPoint start;
        BoundaryPoint end;
    };
    std::vector<Run> runs;
    Rational visible_length = 0;
    for (int i = 0; i < n; ++i) {
        for (const auto& [lo, hi] : edge_visible_intervals(p, g, i)) {
            runs.push_back({canonical_boundary_point(p, i, lo),
                            hi == 1 ? BoundaryPoint(i, Rational(1))
                                    : canonical_boundary_point(p, i, hi)});
            visible_length += hi - lo;
        }
    }
    if (visible_length == n) {
        out.full_boundary = true;
        return out;
    }
    // Merge runs continuing across shared endpoints; (i, 1) equals (i+1, 0).
    auto canon_end = [&](const BoundaryPoint& bp) {
        return bp.s == 1 ? canonical_boundary_point(p, bp.edge, bp.s) : bp;
    };
    std::vector<Run> merged;
    for (const Run& r : runs) {
        if (!merged.empty() && canon_end(merged.back().end) == r.start)
            merged.back().end = r.end;
        else
            merged.push_back(r);
    }
    if (merged.size() > 1 && canon_end(merged.back().end) == merged.front().start) {
        merged.front().start = merged.back().start;
        merged.pop_back();
    }
    if (merged.empty()) throw std::logic_error("viewpoint sees no boundary at all");
    for (const Run& r : merged)
        out.runs.push_back(
            BoundaryInterval{r.start, canon_end(r.end), IntervalClosure::Closed});
    return out;
}

namespace {

// Polyline along the boundary from `from` to `to`: endpoints plus the
// vertices strictly between them.
std::vector<Point> boundary_polyline(const Polygon& p, const BoundaryPoint& from,
                                     const BoundaryPoint& to) {
    std::vector<Point> pts;
    pts.push_back(boundary_to_point(p, from));
    Rational len = arc_forward(p, from, to);
    for (int step = 0; step <= p.size(); ++step) {
        int v = p.index(from.edge + 1 + step);
        Rational d = arc_forward(p, from, vertex_point(p, v));
        if (d == 0) continue;
        if (d < len) pts.push_back(p.vertex(v));
    }
    Point e = boundary_to_point(p, to);
    if (pts.back() != e) pts.push_back(e);
    return pts;
}

}  // namespace

VisibilityPolygon visibility_polygon(const Polygon& p, const Point& x) {
    VisibilityPolygon vp;
    vp.viewpoint = x;
    BoundaryVisibility bv = visible_boundary_runs(p, x);
    if (bv.full_boundary) {
        vp.region = Region::from_polygon(p);
        return vp;
    }
    const auto& merged = bv.runs;
    std::vector<Point> loop;
    for (std::size_t r = 0; r < merged.size(); ++r) {
        std::vector<Point> pl = boundary_polyline(p, merged[r].start, merged[r].end);
        for (const Point& q : pl)
            if (loop.empty() || loop.back() != q) loop.push_back(q);
        const BoundaryInterval& next = merged[(r + 1) % merged.size()];
        Point gap_from = boundary_to_point(p, merged[r].end);
        Point gap_to = boundary_to_point(p, next.start);
        if (orient(x, gap_from, gap_to) != Orientation::Collinear)
            throw std::logic_error("window endpoints not collinear with the viewpoint");
        Window w;
        w.chord = {gap_from, gap_to};
        w.arc_start = merged[r].end;
        w.arc_end = next.start;
        vp.windows.push_back(w);
    }
    if (loop.size() > 1 && loop.front() == loop.back()) loop.pop_back();
    vp.region = Region::from_area(std::move(loop));
    return vp;
}

std::vector<Pocket> pockets(const Polygon& p, const VisibilityPolygon& vp) {
    std::vector<Pocket> out;
    for (const Window& w : vp.windows) {
        std::vector<Point> loop = boundary_polyline(p, w.arc_start, w.arc_end);
        Pocket pk;
        pk.window = w;
        pk.region = Region::from_area(std::move(loop));
        out.push_back(std::move(pk));
    }
    return out;
}

const Region& VisibilityCache::vertex_region(int i) {
    int key = poly_.index(i);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Region r = visibility_polygon(poly_, poly_.vertex(key)).region;
    return cache_.emplace(key, std::move(r)).first->second;
}

Region feasible_region(const Polygon& p, const IntervalSpec& spec, VisibilityCache* cache) {
    std::vector<BoundaryPoint> targets;
    if (std::holds_alternative<BoundaryInterval>(spec)) {
        const BoundaryInterval& iv = std::get<BoundaryInterval>(spec);
        targets.push_back(iv.start);
        if (!(iv.end == iv.start)) {
            Rational len = arc_forward(p, iv.start, iv.end);
            for (int j = 0; j < p.size(); ++j) {
                Rational d = arc_forward(p, iv.start, vertex_point(p, j));
                if (d > 0 && d < len) targets.push_back(vertex_point(p, j));
            }
            targets.push_back(iv.end);
        }
    } else {
        targets = std::get<std::vector<BoundaryPoint>>(spec);
    }
    if (targets.empty()) throw TargetNotOnBoundary("empty target set");
    for (const BoundaryPoint& t : targets) {
        if (t.edge < 0 || t.edge >= p.size() || t.s < 0 || t.s >= 1)
            throw TargetNotOnBoundary("target is not a canonical boundary point");
    }

    Region f;
    bool first = true;
    for (const BoundaryPoint& t : targets) {
        Region vpr;
        const Region* vr = nullptr;
        if (t.s == 0 && cache) {
            vr = &cache->vertex_region(t.edge);
        } else {
            vpr = visibility_polygon(p, boundary_to_point(p, t)).region;
            vr = &vpr;
        }
        if (first) {
            f = *vr;
            first = false;
        } else {
            f = intersect(f, *vr);
        }
        if (f.is_empty()) return f;
    }
    return f;
}

std::optional<Point> kernel_nonempty(const Polygon& p) {
    VisibilityCache cache(p);
    std::vector<BoundaryPoint> all;
    for (int i = 0; i < p.size(); ++i) all.push_back(vertex_point(p, i));
    Region f = feasible_region(p, all, &cache);
    if (f.is_empty()) return std::nullopt;
    return f.all_vertices().front();
}

}  // namespace cag
