#include "cag/last_visible.hpp"

#include <algorithm>
#include <cassert>

namespace cag {

namespace {

Rational cross2(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

Rational dot2(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

// Reach along the failing edge from one guard: the visible set on the edge
// from any point seeing the edge start is a closed prefix [0, r].
Rational guard_reach(const Polygon& p, const Point& g, int edge) {
    auto intervals = edge_visible_intervals(p, g, edge);
    if (intervals.empty() || intervals.front().first != 0)
        throw InconsistentInput("feasible region vertex does not see the edge start");
    if (intervals.size() > 1)
        throw std::logic_error("visible set on an edge from a start-seeing guard must be a prefix");
    return intervals.front().second;
}

// Polygon vertex on the closed sight segment [g, y] nearest to y, if any.
std::optional<Point> blocker_on_sight_line(const Polygon& p, const Point& g, const Point& y) {
    std::optional<Point> best;
    for (int i = 0; i < p.size(); ++i) {
        const Point& w = p.vertex(i);
        if (w == g) continue;
        if (!segment_contains(g, y, w)) continue;
        if (!best || dist2(w, y) < dist2(*best, y)) best = w;
    }
    return best;
}

}  // namespace

LastVisibleResult last_visible_point_ref(const Polygon& p, const Region& feasible, int edge) {
    if (feasible.is_empty()) throw InconsistentInput("empty feasible region");
    const Point v_fail = p.vertex(edge + 1);
    std::vector<Point> guards = feasible.all_vertices();

    std::optional<Rational> best;
    Point best_guard;
    for (const Point& g : guards) {
        Rational r = guard_reach(p, g, edge);
        if (r == 1)
            throw InconsistentInput("a feasible region vertex sees the failing vertex " +
                                    format_point(v_fail));
        Point y = boundary_to_point(p, BoundaryPoint(edge, r));
        if (!best || r > *best) {
            best = r;
            best_guard = g;
        } else if (r == *best && dist2(g, y) < dist2(best_guard, y)) {
            best_guard = g;
        }
    }
    LastVisibleResult out;
    out.point = canonical_boundary_point(p, edge, *best);
    out.guard = best_guard;
    out.blocking_vertex =
        blocker_on_sight_line(p, best_guard, boundary_to_point(p, BoundaryPoint(edge, *best)));
    return out;
}

namespace {

// Tangent lines from an external point to a region's vertex set: supporting
// lines with every region vertex on one closed side.
struct PointTangents {
    Point touch_same;      // the side containing `probe` agrees with the region side
    Point touch_opposite;  // probe on the other side
    bool valid = false;
};

std::optional<Point> supporting_touch(const std::vector<Point>& verts, const Point& from,
                                      bool want_probe_same_side, const Point& probe) {
    for (const Point& u : verts) {
        if (u == from) return std::nullopt;  // from inside/on the region hull: degenerate
        int lo = 0, hi = 0;
        for (const Point& w : verts) {
            int s = sgn(cross(from, u, w));
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        if (lo < 0 && hi > 0) continue;  // not supporting
        int region_side = lo < 0 ? -1 : (hi > 0 ? 1 : 0);
        int probe_side = sgn(cross(from, u, probe));
        if (probe_side == 0) continue;  // probe on the line: degenerate here
        if (region_side == 0) {
            // Region degenerate on the line itself; counts as both.
            if (want_probe_same_side) return u;
            return u;
        }
        bool same = probe_side == region_side;
        if (same == want_probe_same_side) return u;
    }
    return std::nullopt;
}

}  // namespace

std::optional<TangentFrame> tangent_frame(const Polygon& p, const Region& feasible, int edge) {
    if (feasible.is_empty()) return std::nullopt;
    const Point a = p.vertex(edge);      // v_{i-1}: seen by all of F
    const Point b = p.vertex(edge + 1);  // v_i: seen by none
    std::vector<Point> fv = feasible.all_vertices();
    // t_m through a with v_i opposite to F; t_r with v_i on F's side.
    auto tm = supporting_touch(fv, a, false, b);
    auto tr = supporting_touch(fv, a, true, b);
    // t_l through b with v_{i-1} on F's side.
    auto tl = supporting_touch(fv, b, true, a);
    if (!tm || !tr || !tl) return std::nullopt;
    TangentFrame fr;
    fr.t_m_touch = *tm;
    fr.t_r_touch = *tr;
    fr.t_l_touch = *tl;
    auto q = line_intersection(a, fr.t_m_touch, b, fr.t_l_touch);
    if (!q) return std::nullopt;
    fr.q = *q;
    return fr;
}

namespace {

struct TlContact {
    Rational u;  // parameter along [v_i, q]
    Point pt;
};

// All contact parameters of the boundary with the open tangent span (v_i, q].
std::vector<TlContact> tl_contacts(const Polygon& p, const Point& b, const Point& q) {
    std::vector<TlContact> out;
    Point d = q - b;
    for (int i = 0; i < p.size(); ++i) {
        SegmentIntersection s = intersect_segments(b, q, p.vertex(i), p.vertex(i + 1));
        auto push = [&](const Rational& t, const Point& pt) {
            if (t > 0) out.push_back({t, pt});
        };
        if (s.kind == SegmentIntersection::Kind::Point) push(s.t0, s.p0);
        if (s.kind == SegmentIntersection::Kind::Overlap) {
            push(s.t0, s.p0);
            push(s.t1, s.p1);
        }
    }
    std::sort(out.begin(), out.end(), [](const TlContact& x, const TlContact& y) {
        return x.u < y.u;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const TlContact& x, const TlContact& y) { return x.u == y.u; }),
              out.end());
    (void)d;
    return out;
}

}  // namespace

namespace {

// Boundary walk cursor: a point on the boundary plus the index of the next
// vertex in the walk direction.
struct WalkCursor {
    Point at;
    int next_vertex;
    bool forward;
};

}  // namespace

BlockingPolygon build_blocking_polygon(const Polygon& p, const Region& feasible, int edge) {
    auto frame_opt = tangent_frame(p, feasible, edge);
    if (!frame_opt) throw DegenerateTangency("no tangent frame");
    const TangentFrame& fr = *frame_opt;
    const Point a = p.vertex(edge);
    const Point b = p.vertex(edge + 1);
    const Point q = fr.q;
    if (q == b) throw DegenerateTangency("tangent apex coincides with the failing vertex");

    // Side of t_l that holds the congested area (the side of v_{i-1}).
    int congested_side = sgn(cross(b, q, a));
    if (congested_side == 0) throw DegenerateTangency("failing edge lies on the left tangent");
    auto tl_side = [&](const Point& pt) { return sgn(cross(b, q, pt)); };

    // Offset measure against t_m (line through a and the t_m touch point).
    Point dm = fr.t_m_touch - a;
    auto tm_offset = [&](const Point& pt) {
        Rational off = cross2(dm, pt - a);
        return off;
    };
    int tm_side = sgn(tm_offset(b));
    if (tm_side == 0) throw DegenerateTangency("failing vertex on the middle tangent");
    auto tm_clearance = [&](const Point& pt) {
        Rational off = tm_offset(pt);
        return tm_side < 0 ? -off : off;
    };

    const Region& fregion = feasible;
    Point dq = q - b;
    Rational dq2 = dot2(dq, dq);
    auto tl_param = [&](const Point& pt) { return dot2(dq, pt - b) / dq2; };

    std::vector<Point> path{b};
    std::vector<BlockingProvenance> prov{BlockingProvenance::BoundaryVertex};
    auto push = [&](const Point& pt, BlockingProvenance pr) {
        if (path.back() != pt) {
            path.push_back(pt);
            prov.push_back(pr);
        }
    };
    auto is_poly_vertex = [&](const Point& pt) {
        for (int i = 0; i < p.size(); ++i)
            if (p.vertex(i) == pt) return true;
        return false;
    };

    bool hit_feasible = false;
    Point feasible_hit_from, feasible_hit_at;
    auto feasible_contact = [&](const Point& s0, const Point& s1) {
        Region touch = intersect(Region::from_segments({Segment{s0, s1}}), fregion);
        if (touch.is_empty()) return false;
        hit_feasible = true;
        feasible_hit_from = s0;
        // Contact closest to s0 along the segment.
        std::vector<Point> cand = touch.all_vertices();
        feasible_hit_at = cand.front();
        for (const Point& c : cand)
            if (dist2(c, s0) < dist2(feasible_hit_at, s0)) feasible_hit_at = c;
        return true;
    };

    // First boundary point strictly off the t_l line when walking from `loc`.
    auto probe_side = [&](const BoundaryPoint& loc, bool forward) -> int {
        int v = forward ? p.index(loc.edge + 1)
                        : (loc.s > 0 ? loc.edge : p.index(loc.edge - 1 + p.size()));
        for (int step = 0; step < p.size(); ++step) {
            int s = tl_side(p.vertex(v));
            if (s != 0) return s;
            v = forward ? p.index(v + 1) : p.index(v - 1 + p.size());
        }
        return 0;
    };

    std::vector<TlContact> contacts = tl_contacts(p, b, q);
    Rational u_cur = 0;
    int guard_steps = 0;
    bool reached_q = true;
    while (true) {
        const TlContact* next = nullptr;
        for (const TlContact& c : contacts)
            if (c.u > u_cur) {
                next = &c;
                break;
            }
        if (!next) break;  // clean run to q
        Point w = next->pt;
        if (feasible_contact(path.back(), w)) break;
        u_cur = next->u;
        auto wloc = locate_on_boundary(p, w);
        if (!wloc) throw DegenerateTangency("tangent contact is not on the boundary");

        int sf = probe_side(*wloc, true);
        int sb = probe_side(*wloc, false);
        if (sf == 0 || sb == 0) throw DegenerateTangency("boundary runs along the left tangent");
        if (sf != congested_side && sb != congested_side) {
            // Boundary grazes the tangent from the far side: not part of the
            // blocking region, skip past it.
            continue;
        }
        push(w, is_poly_vertex(w) ? BlockingProvenance::BoundaryVertex
                                  : BlockingProvenance::OnTangentLine);
        if (sf == congested_side && sb == congested_side) {
            // The boundary touches the tangent and retreats: a single corner.
            continue;
        }

        bool forward = sf == congested_side;
        WalkCursor cur;
        cur.at = w;
        cur.forward = forward;
        cur.next_vertex = forward ? p.index(wloc->edge + 1)
                                  : (wloc->s > 0 ? wloc->edge
                                                 : p.index(wloc->edge - 1 + p.size()));
        bool exited = false;
        while (!exited) {
            if (++guard_steps > 4 * p.size() + 8)
                throw DegenerateTangency("blocking trace did not close");
            Point nxt = p.vertex(cur.next_vertex);
            if (feasible_contact(cur.at, nxt)) break;
            SegmentIntersection x = intersect_segments(cur.at, nxt, b, q);
            if (x.kind == SegmentIntersection::Kind::Overlap)
                throw DegenerateTangency("boundary runs along the left tangent");
            if (x.kind == SegmentIntersection::Kind::Point && x.p0 != cur.at) {
                Point cp = x.p0;
                // Does the boundary continue on the congested side past cp?
                int side_after;
                if (cp == nxt) {
                    auto nloc = vertex_point(p, cur.next_vertex);
                    side_after = probe_side(nloc, cur.forward);
                } else {
                    side_after = tl_side(nxt);
                }
                if (side_after == congested_side) {
                    // Grazing: stays in the congested area, keep walking.
                    push(cp, is_poly_vertex(cp) ? BlockingProvenance::BoundaryVertex
                                                : BlockingProvenance::OnTangentLine);
                    if (cp != nxt) push(nxt, BlockingProvenance::BoundaryVertex);
                    else {
                        // cp == nxt already pushed above
                    }
                } else {
                    push(cp, is_poly_vertex(cp) ? BlockingProvenance::BoundaryVertex
                                                : BlockingProvenance::OnTangentLine);
                    u_cur = tl_param(cp);
                    exited = true;
                    break;
                }
            } else {
                push(nxt, BlockingProvenance::BoundaryVertex);
            }
            cur.at = nxt;
            cur.next_vertex = cur.forward ? p.index(cur.next_vertex + 1)
                                          : p.index(cur.next_vertex - 1 + p.size());
        }
        if (hit_feasible) break;
        if (!exited) throw DegenerateTangency("boundary walk left the congested area silently");
    }
    (void)reached_q;

    // Clearance of traced vertices from the t_m line.
    std::optional<Rational> min_clear;
    for (const Point& pt : path) {
        Rational c = tm_clearance(pt);
        if (c > 0 && (!min_clear || c < *min_clear)) min_clear = c;
    }
    if (!min_clear) throw DegenerateTangency("no clearance between the trace and the tangent");
    Rational delta = *min_clear / 2;

    if (hit_feasible) {
        // Back off along the incoming segment to clearance delta before
        // heading for the synthetic corner.
        Rational c_from = tm_clearance(feasible_hit_from);
        Rational c_hit = tm_clearance(feasible_hit_at);
        Point cut;
        if (c_from > c_hit) {
            Rational want = std::min(delta, (c_from + c_hit) / 2);
            if (want <= c_hit) want = (c_from + c_hit) / 2;
            Rational t = (want - c_hit) / (c_from - c_hit);
            cut = {feasible_hit_at.x + t * (feasible_hit_from.x - feasible_hit_at.x),
                   feasible_hit_at.y + t * (feasible_hit_from.y - feasible_hit_at.y)};
        } else {
            cut = {(feasible_hit_from.x + feasible_hit_at.x) / 2,
                   (feasible_hit_from.y + feasible_hit_at.y) / 2};
        }
        push(cut, BlockingProvenance::Synthetic);
    }

    // Synthetic tail: r just off q into the congested side of t_m, then a
    // point translated parallel to t_l, closing back at v_i.
    Rational dm2 = dot2(dm, dm);
    Point perp{-dm.y, dm.x};
    if (sgn(tm_offset(a + perp)) != tm_side) perp = Point{dm.y, -dm.x};
    Rational lambda = delta / dm2;
    Point r{q.x + lambda * perp.x, q.y + lambda * perp.y};
    push(r, BlockingProvenance::Synthetic);
    Point r2 = r + (b - q);
    push(r2, BlockingProvenance::Synthetic);
    if (path.back() == path.front()) {
        path.pop_back();
        prov.pop_back();
    }

    BlockingPolygon out;
    out.boundary = path;
    out.provenance = prov;
    if (out.boundary.size() < 3) throw DegenerateTangency("blocking polygon degenerated");
    try {
        validate_simple(out.boundary);
    } catch (const PolygonError&) {
        throw DegenerateTangency("blocking polygon is not simple");
    }
    Region breg = Region::from_area(out.boundary);
    if (!intersect(breg, fregion).is_empty())
        throw DegenerateTangency("blocking polygon touches the feasible region");
    return out;
}

std::vector<Segment> common_tangents(const Region& a, const std::vector<Point>& b) {
    std::vector<Point> av = a.all_vertices();
    std::vector<Segment> out;
    auto same_line = [](const Segment& s, const Point& u, const Point& w) {
        return orient(s.a, s.b, u) == Orientation::Collinear &&
               orient(s.a, s.b, w) == Orientation::Collinear;
    };
    for (const Point& u : av) {
        for (const Point& w : b) {
            if (u == w) continue;
            int alo = 0, ahi = 0;
            for (const Point& x : av) {
                int s = sgn(cross(u, w, x));
                alo = std::min(alo, s);
                ahi = std::max(ahi, s);
            }
            if (alo < 0 && ahi > 0) continue;
            int blo = 0, bhi = 0;
            for (const Point& x : b) {
                int s = sgn(cross(u, w, x));
                blo = std::min(blo, s);
                bhi = std::max(bhi, s);
            }
            if (blo < 0 && bhi > 0) continue;
            bool dup = false;
            for (const Segment& s : out)
                if (same_line(s, u, w)) {
                    dup = true;
                    break;
                }
            if (!dup) out.push_back({u, w});
        }
    }
    return out;
}

LastVisibleResult last_visible_point_tangent(const Polygon& p, const Region& feasible, int edge) {
    try {
        BlockingPolygon bp = build_blocking_polygon(p, feasible, edge);
        std::vector<Segment> tangents = common_tangents(feasible, bp.boundary);
        const Point v_prev = p.vertex(edge);
        const Point v_fail = p.vertex(edge + 1);
        std::vector<Point> fverts = feasible.all_vertices();

        std::optional<Rational> best;
        Point best_guard;
        std::optional<Point> best_blocker;
        auto consider = [&](const Rational& s, const Point& g, const std::optional<Point>& c) {
            Point y = boundary_to_point(p, BoundaryPoint(edge, s));
            if (!best || s > *best) {
                best = s;
                best_guard = g;
                best_blocker = c;
            } else if (s == *best && dist2(g, y) < dist2(best_guard, y)) {
                best_guard = g;
                best_blocker = c;
            }
        };
        // The edge start is always reachable by some region vertex.
        for (const Point& g : fverts) {
            if (sees(p, g, v_prev)) {
                consider(Rational(0), g, std::nullopt);
                break;
            }
        }
        for (const Segment& t : tangents) {
            auto s = line_intersection_param(t.a, t.b, v_fail, v_prev);
            if (!s || *s < 0 || *s >= 1) continue;
            Point y = boundary_to_point(p, BoundaryPoint(edge, *s));
            // All region vertices on this tangent line are candidate guards.
            for (const Point& g : fverts) {
                if (orient(t.a, t.b, g) != Orientation::Collinear) continue;
                if (!sees(p, g, y)) continue;
                std::optional<Point> c = blocker_on_sight_line(p, g, y);
                consider(*s, g, c);
            }
        }
        if (!best) throw DegenerateTangency("no valid tangent candidate");
        LastVisibleResult out;
        out.point = canonical_boundary_point(p, edge, *best);
        out.guard = best_guard;
        out.blocking_vertex = best_blocker;
        return out;
    } catch (const DegenerateTangency&) {
        return last_visible_point_ref(p, feasible, edge);
    }
}

}  // namespace cag
