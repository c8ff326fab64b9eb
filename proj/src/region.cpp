#include "cag/region.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace cag {

namespace {

using Loop = std::vector<Point>;

struct PointLess {
    bool operator()(const Point& a, const Point& b) const {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

Point midpoint(const Point& a, const Point& b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

Rational cross2(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

}  // namespace

Rational loop_twice_area(const Loop& loop) {
    Rational a = 0;
    int n = static_cast<int>(loop.size());
    for (int i = 0; i < n; ++i) {
        const Point& p = loop[i];
        const Point& q = loop[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return a;
}

bool point_on_loop_boundary(const Loop& loop, const Point& q) {
    int n = static_cast<int>(loop.size());
    for (int i = 0; i < n; ++i)
        if (segment_contains(loop[i], loop[(i + 1) % n], q)) return true;
    return false;
}

bool point_in_loop(const Loop& loop, const Point& q) {
    if (point_on_loop_boundary(loop, q)) return true;
    // Crossing parity of a ray in +x direction; the half-open vertex rule
    // makes vertices and horizontal edges safe. Doubled (spike) edges cancel.
    int n = static_cast<int>(loop.size());
    bool inside = false;
    for (int i = 0; i < n; ++i) {
        const Point& a = loop[i];
        const Point& b = loop[(i + 1) % n];
        bool a_above = a.y > q.y;
        bool b_above = b.y > q.y;
        if (a_above == b_above) continue;
        Rational xint = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (xint > q.x) inside = !inside;
    }
    return inside;
}

namespace {

// Smallest u > 0 with m + u*dir on the closed segment [c,d]; nullopt if none.
std::optional<Rational> ray_segment_first_hit(const Point& m, const Point& dir, const Point& c,
                                              const Point& d) {
    Point cd = d - c;
    Point cm = c - m;
    Rational den = cross2(dir, cd);
    if (den != 0) {
        Rational u = cross2(cm, cd) / den;
        Rational t = -cross2(dir, cm) / den;
        if (u > 0 && t >= 0 && t <= 1) return u;
        return std::nullopt;
    }
    if (cross2(dir, cm) != 0) return std::nullopt;  // parallel, off the ray line
    Rational dd = dot(dir, dir);
    Rational uc = dot(dir, c - m) / dd;
    Rational ud = dot(dir, d - m) / dd;
    Rational lo = std::min(uc, ud), hi = std::max(uc, ud);
    if (hi <= 0) return std::nullopt;
    return lo > 0 ? lo : Rational(0);
}

// Whether the interior of `loop` occupies the open side of m in direction
// `normal`, for a point m on the loop's boundary with no node at m.
bool interior_on_side(const Loop& loop, const Point& m, const Point& normal) {
    std::optional<Rational> first;
    int n = static_cast<int>(loop.size());
    for (int i = 0; i < n; ++i) {
        auto u = ray_segment_first_hit(m, normal, loop[i], loop[(i + 1) % n]);
        if (u && *u > 0 && (!first || *u < *first)) first = *u;
    }
    Rational step = first ? *first / 2 : Rational(1);
    Point probe = m + step * normal;
    return point_in_loop(loop, probe) && !point_on_loop_boundary(loop, probe);
}

struct DirEdge {
    Point a;
    Point b;
};

// Splits every edge of `subject` at its intersections with `clip` edges.
std::vector<DirEdge> split_loop_edges(const Loop& subject, const Loop& clip) {
    std::vector<DirEdge> out;
    int n = static_cast<int>(subject.size());
    int m = static_cast<int>(clip.size());
    for (int i = 0; i < n; ++i) {
        Point p = subject[i];
        Point q = subject[(i + 1) % n];
        std::vector<Rational> params{Rational(0), Rational(1)};
        for (int j = 0; j < m; ++j) {
            SegmentIntersection x =
                intersect_segments(p, q, clip[j], clip[(j + 1) % m]);
            if (x.kind == SegmentIntersection::Kind::Point) {
                params.push_back(x.t0);
            } else if (x.kind == SegmentIntersection::Kind::Overlap) {
                params.push_back(x.t0);
                params.push_back(x.t1);
            }
        }
        std::sort(params.begin(), params.end());
        params.erase(std::unique(params.begin(), params.end()), params.end());
        Point d = q - p;
        for (std::size_t k = 0; k + 1 < params.size(); ++k) {
            if (params[k] < 0 || params[k + 1] > 1) continue;
            Point s0 = {p.x + params[k] * d.x, p.y + params[k] * d.y};
            Point s1 = {p.x + params[k + 1] * d.x, p.y + params[k + 1] * d.y};
            if (s0 != s1) out.push_back({s0, s1});
        }
    }
    return out;
}

// Clockwise rotation class from ref: 0 = strictly cw side (rotation in
// (0,pi)), 1 = exactly opposite, 2 = strictly ccw side, 3 = same direction
// (a full turn, ranks last).
int cw_class(const Point& ref, const Point& d) {
    Rational cr = cross2(ref, d);
    if (cr < 0) return 0;
    if (cr > 0) return 2;
    return dot(ref, d) > 0 ? 3 : 1;
}

// True iff rotating clockwise from `ref` meets d1 strictly before d2.
bool cw_rotation_less(const Point& ref, const Point& d1, const Point& d2) {
    int c1 = cw_class(ref, d1);
    int c2 = cw_class(ref, d2);
    if (c1 != c2) return c1 < c2;
    if (c1 == 0 || c1 == 2) return cross2(d1, d2) < 0;
    return false;
}

struct Overlay {
    std::vector<Loop> faces;
    std::vector<Segment> degenerate_segments;
    std::vector<Point> nodes;  // candidate touch points
};

Overlay overlay_area_area(const Loop& U, const Loop& V) {
    Overlay out;
    std::vector<DirEdge> kept;

    auto classify = [&](const std::vector<DirEdge>& subs, const Loop& other, bool skip_shared) {
        for (const DirEdge& e : subs) {
            Point m = midpoint(e.a, e.b);
            if (!point_in_loop(other, m)) continue;
            if (!point_on_loop_boundary(other, m)) {
                kept.push_back(e);
                continue;
            }
            if (skip_shared) continue;  // handled from the first polygon's side
            Point d = e.b - e.a;
            Point right{d.y, -d.x};
            Point left{-d.y, d.x};
            bool right_in = interior_on_side(other, m, right);
            bool left_in = interior_on_side(other, m, left);
            if (right_in) {
                kept.push_back(e);  // 2-d intersection on our interior side
            } else if (left_in) {
                out.degenerate_segments.push_back({e.a, e.b});
            } else {
                out.degenerate_segments.push_back({e.a, e.b});
            }
        }
    };

    classify(split_loop_edges(U, V), V, false);
    classify(split_loop_edges(V, U), U, true);

    // Node table.
    std::map<Point, int, PointLess> node_id;
    auto node_of = [&](const Point& p) {
        auto it = node_id.find(p);
        if (it != node_id.end()) return it->second;
        int id = static_cast<int>(out.nodes.size());
        node_id.emplace(p, id);
        out.nodes.push_back(p);
        return id;
    };

    struct HalfEdge {
        int from, to;
        Point a, b;
        bool used = false;
    };
    std::vector<HalfEdge> hes;
    for (const DirEdge& e : kept) {
        int u = node_of(e.a);
        int v = node_of(e.b);
        hes.push_back({u, v, e.a, e.b, false});
    }
    std::vector<std::vector<int>> outgoing(out.nodes.size());
    for (int i = 0; i < static_cast<int>(hes.size()); ++i) outgoing[hes[i].from].push_back(i);

    // Trace faces keeping the enclosed region on the right of each edge. The
    // rotation rule pairs each incoming edge with the outgoing edge reached
    // first when sweeping clockwise from the reversed arrival direction.
    for (int start = 0; start < static_cast<int>(hes.size()); ++start) {
        if (hes[start].used) continue;
        Loop cycle;
        int cur = start;
        int guard = 0;
        while (true) {
            hes[cur].used = true;
            cycle.push_back(hes[cur].a);
            Point arrive_dir = hes[cur].b - hes[cur].a;
            Point ref{-arrive_dir.x, -arrive_dir.y};
            int next = -1;
            for (int cand : outgoing[hes[cur].to]) {
                Point d = hes[cand].b - hes[cand].a;
                if (next == -1 || cw_rotation_less(ref, d, hes[next].b - hes[next].a))
                    next = cand;
            }
            if (next == -1)
                throw std::logic_error("region overlay: dangling boundary edge");
            if (next == start) break;
            if (hes[next].used)
                throw std::logic_error("region overlay: inconsistent face structure");
            cur = next;
            if (++guard > static_cast<int>(hes.size()) + 2)
                throw std::logic_error("region overlay: face trace did not close");
        }
        if (cycle.size() < 2) continue;
        Rational a2 = loop_twice_area(cycle);
        if (a2 < 0) {
            out.faces.push_back(std::move(cycle));
        } else if (a2 == 0) {
            int cn = static_cast<int>(cycle.size());
            for (int i = 0; i < cn; ++i) {
                const Point& p = cycle[i];
                const Point& q = cycle[(i + 1) % cn];
                if (p != q) out.degenerate_segments.push_back({p, q});
            }
        }
        // Positive (counterclockwise) cycles would be holes; intersections of
        // simply connected sets have none.
    }
    return out;
}

// Sub-pieces of segment [a,b] inside the loop: kept sub-segments plus
// isolated boundary touch points.
void clip_segment_to_loop(const Point& a, const Point& b, const Loop& loop,
                          std::vector<Segment>& segs, std::vector<Point>& pts) {
    std::vector<Rational> params{Rational(0), Rational(1)};
    int n = static_cast<int>(loop.size());
    for (int j = 0; j < n; ++j) {
        SegmentIntersection x = intersect_segments(a, b, loop[j], loop[(j + 1) % n]);
        if (x.kind == SegmentIntersection::Kind::Point) params.push_back(x.t0);
        if (x.kind == SegmentIntersection::Kind::Overlap) {
            params.push_back(x.t0);
            params.push_back(x.t1);
        }
    }
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    Point d = b - a;
    std::vector<std::pair<Rational, Rational>> kept;
    for (std::size_t k = 0; k + 1 < params.size(); ++k) {
        Point m = {a.x + (params[k] + params[k + 1]) / 2 * d.x,
                   a.y + (params[k] + params[k + 1]) / 2 * d.y};
        if (point_in_loop(loop, m)) {
            if (!kept.empty() && kept.back().second == params[k])
                kept.back().second = params[k + 1];
            else
                kept.emplace_back(params[k], params[k + 1]);
        }
    }
    for (auto& [t0, t1] : kept) {
        Point p0 = {a.x + t0 * d.x, a.y + t0 * d.y};
        Point p1 = {a.x + t1 * d.x, a.y + t1 * d.y};
        segs.push_back({p0, p1});
    }
    // Isolated touch points: breakpoints inside the loop but not in any kept run.
    for (const Rational& t : params) {
        bool covered = false;
        for (auto& [t0, t1] : kept)
            if (t0 <= t && t <= t1) {
                covered = true;
                break;
            }
        if (covered) continue;
        Point p = {a.x + t * d.x, a.y + t * d.y};
        if (point_in_loop(loop, p)) pts.push_back(p);
    }
}

}  // namespace

Region Region::single_point(Point p) {
    Region r;
    r.points_.push_back(std::move(p));
    return r;
}

Region Region::from_segments(std::vector<Segment> segs) {
    Region r;
    r.segments_ = std::move(segs);
    r.normalize();
    return r;
}

Region Region::from_area(Loop loop) {
    Region r;
    r.add_area(std::move(loop));
    r.normalize();
    return r;
}

Region Region::from_polygon(const Polygon& p) {
    return from_area(p.vertices());
}

void Region::add_area(Loop loop) {
    if (loop.size() < 3) {
        if (loop.size() == 2) {
            add_segment({loop[0], loop[1]});
            return;
        }
        if (loop.size() == 1) {
            add_point(loop[0]);
            return;
        }
        return;
    }
    Rational a2 = loop_twice_area(loop);
    if (a2 == 0) {
        int n = static_cast<int>(loop.size());
        for (int i = 0; i < n; ++i)
            if (loop[i] != loop[(i + 1) % n]) add_segment({loop[i], loop[(i + 1) % n]});
        return;
    }
    if (a2 > 0) std::reverse(loop.begin(), loop.end());
    areas_.push_back(std::move(loop));
}

void Region::add_segment(const Segment& s) {
    if (s.a == s.b) {
        add_point(s.a);
        return;
    }
    segments_.push_back(s);
}

void Region::add_point(const Point& p) { points_.push_back(p); }

void Region::normalize() {
    // Merge collinear touching segments and dedupe.
    auto canon = [](Segment s) {
        PointLess less;
        if (less(s.b, s.a)) std::swap(s.a, s.b);
        return s;
    };
    for (auto& s : segments_) s = canon(s);
    std::sort(segments_.begin(), segments_.end(), [](const Segment& x, const Segment& y) {
        PointLess less;
        if (x.a != y.a) return less(x.a, y.a);
        return less(x.b, y.b);
    });
    segments_.erase(std::unique(segments_.begin(), segments_.end(),
                                [](const Segment& x, const Segment& y) {
                                    return x.a == y.a && x.b == y.b;
                                }),
                    segments_.end());
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < segments_.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < segments_.size() && !merged; ++j) {
                Segment& x = segments_[i];
                Segment& y = segments_[j];
                if (orient(x.a, x.b, y.a) != Orientation::Collinear ||
                    orient(x.a, x.b, y.b) != Orientation::Collinear)
                    continue;
                // Collinear: merge if they overlap or touch.
                SegmentIntersection z = intersect_segments(x.a, x.b, y.a, y.b);
                if (z.kind == SegmentIntersection::Kind::None) continue;
                std::vector<Point> pts{x.a, x.b, y.a, y.b};
                std::sort(pts.begin(), pts.end(), PointLess());
                x = canon({pts.front(), pts.back()});
                segments_.erase(segments_.begin() + static_cast<long>(j));
                merged = true;
            }
        }
    }
    // Drop segments lying inside an area piece.
    auto seg_in_area = [&](const Segment& s) {
        Point m = midpoint(s.a, s.b);
        for (const Loop& loop : areas_)
            if (point_in_loop(loop, s.a) && point_in_loop(loop, s.b) && point_in_loop(loop, m))
                return true;
        return false;
    };
    segments_.erase(std::remove_if(segments_.begin(), segments_.end(), seg_in_area),
                    segments_.end());
    // Drop points covered by segments or areas.
    auto pt_covered = [&](const Point& p) {
        for (const Loop& loop : areas_)
            if (point_in_loop(loop, p)) return true;
        for (const Segment& s : segments_)
            if (segment_contains(s.a, s.b, p)) return true;
        return false;
    };
    points_.erase(std::remove_if(points_.begin(), points_.end(), pt_covered), points_.end());
    std::sort(points_.begin(), points_.end(), PointLess());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

RegionKind Region::kind() const {
    if (!areas_.empty()) return RegionKind::Area;
    if (!segments_.empty()) return RegionKind::SegmentChain;
    if (points_.size() == 1) return RegionKind::SinglePoint;
    if (points_.empty()) return RegionKind::Empty;
    return RegionKind::SegmentChain;  // multiple isolated points: degenerate chain
}

bool Region::is_empty() const { return areas_.empty() && segments_.empty() && points_.empty(); }

bool Region::contains(const Point& q) const {
    for (const Loop& loop : areas_)
        if (point_in_loop(loop, q)) return true;
    for (const Segment& s : segments_)
        if (segment_contains(s.a, s.b, q)) return true;
    for (const Point& p : points_)
        if (p == q) return true;
    return false;
}

std::vector<Point> Region::all_vertices() const {
    std::vector<Point> out;
    for (const Loop& loop : areas_) out.insert(out.end(), loop.begin(), loop.end());
    for (const Segment& s : segments_) {
        out.push_back(s.a);
        out.push_back(s.b);
    }
    out.insert(out.end(), points_.begin(), points_.end());
    std::sort(out.begin(), out.end(), PointLess());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational Region::twice_area() const {
    Rational a = 0;
    for (const Loop& loop : areas_) a += abs(loop_twice_area(loop));
    return a;
}

int region_vertex_count(const Region& r) {
    switch (r.kind()) {
        case RegionKind::Empty:
        case RegionKind::SinglePoint:
            return 0;
        case RegionKind::SegmentChain: {
            std::vector<Point> pts;
            for (const Segment& s : r.segments()) {
                pts.push_back(s.a);
                pts.push_back(s.b);
            }
            for (const Point& p : r.points()) pts.push_back(p);
            std::sort(pts.begin(), pts.end(), PointLess());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            return static_cast<int>(pts.size());
        }
        case RegionKind::Area: {
            int c = 0;
            for (const auto& loop : r.areas()) c += static_cast<int>(loop.size());
            for (const Segment& s : r.segments()) {
                (void)s;
                c += 2;
            }
            return c;
        }
    }
    return 0;
}

Region intersect(const Region& a, const Region& b) {
    Region out;
    // area x area
    for (const auto& la : a.areas()) {
        for (const auto& lb : b.areas()) {
            Overlay ov = overlay_area_area(la, lb);
            for (auto& f : ov.faces) out.add_area(std::move(f));
            for (auto& s : ov.degenerate_segments) out.add_segment(s);
            for (const Point& p : ov.nodes)
                if (point_in_loop(la, p) && point_in_loop(lb, p)) out.add_point(p);
            // Corner-touch candidates that produce no edges at all.
            for (const Point& p : la)
                if (point_in_loop(lb, p)) out.add_point(p);
            for (const Point& p : lb)
                if (point_in_loop(la, p)) out.add_point(p);
        }
    }
    // area x segment (both directions)
    std::vector<Segment> tmp_segs;
    std::vector<Point> tmp_pts;
    for (const auto& la : a.areas())
        for (const Segment& s : b.segments()) clip_segment_to_loop(s.a, s.b, la, tmp_segs, tmp_pts);
    for (const auto& lb : b.areas())
        for (const Segment& s : a.segments()) clip_segment_to_loop(s.a, s.b, lb, tmp_segs, tmp_pts);
    for (const Segment& s : tmp_segs) out.add_segment(s);
    for (const Point& p : tmp_pts) out.add_point(p);
    // segment x segment
    for (const Segment& sa : a.segments()) {
        for (const Segment& sb : b.segments()) {
            SegmentIntersection x = intersect_segments(sa.a, sa.b, sb.a, sb.b);
            if (x.kind == SegmentIntersection::Kind::Point)
                out.add_point(x.p0);
            else if (x.kind == SegmentIntersection::Kind::Overlap)
                out.add_segment({x.p0, x.p1});
        }
    }
    // points
    for (const Point& p : a.points())
        if (b.contains(p)) out.add_point(p);
    for (const Point& p : b.points())
        if (a.contains(p)) out.add_point(p);
    out.normalize();
    return out;
}

bool region_is_connected(const Region& r) {
    // Piece graph: pieces are connected when they share at least one point.
    struct Piece {
        int kind;  // 0 area, 1 segment, 2 point
        int idx;
    };
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < r.areas().size(); ++i) pieces.push_back({0, static_cast<int>(i)});
    for (std::size_t i = 0; i < r.segments().size(); ++i)
        pieces.push_back({1, static_cast<int>(i)});
    for (std::size_t i = 0; i < r.points().size(); ++i) pieces.push_back({2, static_cast<int>(i)});
    if (pieces.size() <= 1) return true;

    auto touches = [&](const Piece& x, const Piece& y) -> bool {
        auto piece_region = [&](const Piece& p) -> Region {
            if (p.kind == 0) return Region::from_area(r.areas()[p.idx]);
            if (p.kind == 1) return Region::from_segments({r.segments()[p.idx]});
            return Region::single_point(r.points()[p.idx]);
        };
        Region rx = piece_region(x);
        Region ry = piece_region(y);
        return !intersect(rx, ry).is_empty();
    };

    std::vector<int> comp(pieces.size(), -1);
    std::vector<std::size_t> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            if (comp[j] != -1) continue;
            if (touches(pieces[i], pieces[j])) {
                comp[j] = 0;
                stack.push_back(j);
            }
        }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

}  // namespace cag
