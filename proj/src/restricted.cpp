#include "cag/restricted.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "cag/visibility.hpp"

namespace cag {

namespace {

// Arc measured as (start position, clockwise length); start == end encodes
// the full boundary.
struct FlatArc {
    Rational start;
    Rational len;
    int origin;  // index into the input arc list
};

Rational arc_length(const Polygon& p, const Arc& a) {
    if (a.interval.start == a.interval.end) return Rational(p.size());
    return arc_forward(p, a.interval.start, a.interval.end);
}

}  // namespace

std::vector<Arc> circle_cover_min(const Polygon& p, const std::vector<Arc>& arcs) {
    if (arcs.empty()) throw Uncoverable("no arcs given");
    const Rational n = p.size();
    std::vector<FlatArc> flat;
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
        Rational len = arc_length(p, arcs[i]);
        if (len >= n) return {arcs[i]};  // one full-circle arc suffices
        if (len == 0) continue;          // point arcs never help a cover
        flat.push_back({boundary_tau(p, arcs[i].interval.start), len, i});
    }
    if (flat.empty()) throw Uncoverable("arcs have zero total length");

    // Coverage check on the unrolled line.
    {
        Rational origin = flat.front().start;
        std::vector<std::pair<Rational, Rational>> spans;
        for (const FlatArc& a : flat) {
            Rational s = a.start - origin;
            while (s < 0) s += n;
            spans.emplace_back(s, s + a.len);
            spans.emplace_back(s - n, s + a.len - n);
        }
        std::sort(spans.begin(), spans.end());
        Rational reach = 0;
        for (const auto& [s, e] : spans) {
            if (s > reach) break;
            reach = std::max(reach, e);
        }
        if (reach < n) throw Uncoverable("arcs do not cover the whole boundary");
    }

    // Prune arcs contained in another arc; equal arcs keep the first copy.
    std::vector<FlatArc> kept;
    for (const FlatArc& a : flat) {
        bool dominated = false;
        for (const FlatArc& b : flat) {
            if (a.origin == b.origin) continue;
            Rational off = a.start - b.start;
            while (off < 0) off += n;
            if (off + a.len <= b.len &&
                (a.len < b.len || (off == 0 && a.origin > b.origin))) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(a);
    }

    // Greedy sweep from every undominated arc.
    std::optional<std::vector<int>> best;
    for (const FlatArc& a0 : kept) {
        std::vector<int> pick{a0.origin};
        Rational reach = a0.len;  // unrolled, measured from a0.start
        bool ok = true;
        while (reach < n) {
            std::optional<Rational> best_reach;
            int best_arc = -1;
            for (const FlatArc& c : kept) {
                Rational off = c.start - a0.start;
                while (off < 0) off += n;
                // Candidate representatives at off and off + n.
                for (int rep = 0; rep < 2; ++rep) {
                    Rational s = off + rep * n;
                    if (s > reach) continue;
                    Rational e = s + c.len;
                    if (!best_reach || e > *best_reach) {
                        best_reach = e;
                        best_arc = c.origin;
                    }
                }
            }
            if (!best_reach || *best_reach <= reach) {
                ok = false;
                break;
            }
            reach = *best_reach;
            pick.push_back(best_arc);
            if (static_cast<int>(pick.size()) > static_cast<int>(kept.size()) + 1) {
                ok = false;
                break;
            }
        }
        if (ok && (!best || pick.size() < best->size())) best = pick;
    }
    if (!best) throw Uncoverable("greedy sweep found no cover");
    std::vector<Arc> out;
    for (int i : *best) out.push_back(arcs[i]);
    return out;
}

namespace {

// Clips a covering arc set (in greedy extension order, starting with the
// sweep anchor) into consecutive chains that partition the boundary exactly.
std::vector<Arc> partition_from_cover(const Polygon& p, std::vector<Arc> cover) {
    if (cover.size() == 1) return cover;
    std::vector<Arc> chains = cover;
    int m = static_cast<int>(cover.size());
    for (int j = 1; j < m; ++j) chains[j].interval.start = chains[j - 1].interval.end;
    chains.back().interval.end = chains.front().interval.start;
    std::vector<Arc> out;
    for (const Arc& c : chains)
        if (!(c.interval.start == c.interval.end)) out.push_back(c);
    return out;
}

}  // namespace

RestrictedSolution solve_interval_restricted(const Polygon& p) {
    VisibilityCache cache(p);
    RestrictedSolution sol;
    sol.mode = RestrictedMode::IntervalVertexRestricted;
    std::vector<Arc> arcs;
    for (int i = 0; i < p.size(); ++i) {
        GreedyStep gs = greedy_interval(p, vertex_point(p, i), &cache);
        if (gs.full_wrap) {
            Arc full;
            full.interval = {vertex_point(p, i), vertex_point(p, i), IntervalClosure::Closed};
            full.guard = gs.guard;
            sol.chains = {full};
            sol.size = 1;
            return sol;
        }
        // Truncate to the last vertex inside the greedy interval.
        BoundaryPoint vend = vertex_point(p, gs.end.edge);
        Arc a;
        a.interval = {vertex_point(p, i), vend, IntervalClosure::Closed};
        a.guard = gs.guard;
        if (arc_forward(p, a.interval.start, a.interval.end) == 0)
            continue;  // should not happen: greedy steps span at least one edge
        arcs.push_back(a);
    }
    std::vector<Arc> cover = circle_cover_min(p, arcs);
    sol.chains = partition_from_cover(p, std::move(cover));
    sol.size = static_cast<int>(sol.chains.size());
    return sol;
}

RestrictedSolution solve_guard_restricted(const Polygon& p) {
    RestrictedSolution sol;
    sol.mode = RestrictedMode::GuardVertexRestricted;
    std::vector<Arc> arcs;
    for (int i = 0; i < p.size(); ++i) {
        const Point g = p.vertex(i);
        BoundaryVisibility bv = visible_boundary_runs(p, g);
        if (bv.full_boundary) {
            Arc full;
            full.interval = {vertex_point(p, i), vertex_point(p, i), IntervalClosure::Closed};
            full.guard = g;
            sol.chains = {full};
            sol.size = 1;
            return sol;
        }
        for (const BoundaryInterval& run : bv.runs) {
            if (run.start == run.end) continue;  // isolated visible point
            arcs.push_back({run, g});
        }
    }
    std::vector<Arc> cover = circle_cover_min(p, arcs);
    sol.chains = partition_from_cover(p, std::move(cover));
    sol.size = static_cast<int>(sol.chains.size());
    return sol;
}

std::string restricted_to_json(const Polygon& p, const RestrictedSolution& s) {
    nlohmann::json chains = nlohmann::json::array();
    for (const Arc& c : s.chains) {
        nlohmann::json jc;
        jc["start"] = {c.interval.start.edge, format_rational(c.interval.start.s)};
        jc["end"] = {c.interval.end.edge, format_rational(c.interval.end.s)};
        jc["guard"] = {format_rational(c.guard.x), format_rational(c.guard.y)};
        chains.push_back(jc);
    }
    nlohmann::json doc;
    doc["size"] = s.size;
    doc["mode"] = s.mode == RestrictedMode::IntervalVertexRestricted ? "interval-vertex"
                                                                     : "guard-vertex";
    doc["chains"] = chains;
    return doc.dump(2);
}

}  // namespace cag
