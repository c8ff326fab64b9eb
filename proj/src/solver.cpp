#include "cag/solver.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "cag/last_visible.hpp"

namespace cag {

GreedyStep greedy_interval(const Polygon& p, const BoundaryPoint& x, VisibilityCache* cache) {
    int n = p.size();
    Point xp = boundary_to_point(p, x);
    Region f = visibility_polygon(p, xp).region;
    // Absorb vertices clockwise while a common guard exists.
    for (int cnt = 0; cnt < n; ++cnt) {
        int v = p.index(x.edge + 1 + cnt);
        const Region* vr;
        Region local;
        if (cache) {
            vr = &cache->vertex_region(v);
        } else {
            local = visibility_polygon(p, p.vertex(v)).region;
            vr = &local;
        }
        Region fn = intersect(f, *vr);
        if (fn.is_empty()) {
            int failing_edge = p.index(v - 1 + n);
            LastVisibleResult lv = last_visible_point_ref(p, f, failing_edge);
            GreedyStep step;
            step.start = x;
            step.end = lv.point;
            step.guard = lv.guard;
            return step;
        }
        f = std::move(fn);
    }
    // Every vertex plus x is visible from one guard: star-shaped polygon.
    GreedyStep step;
    step.start = x;
    step.end = x;
    step.guard = f.all_vertices().front();
    step.full_wrap = true;
    return step;
}

std::string certificate_kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::StarShaped: return "StarShaped";
        case CertificateKind::Repetition: return "Repetition";
        case CertificateKind::PositiveFingerprint: return "PositiveFingerprint";
        case CertificateKind::EdgeJumpEscape: return "EdgeJumpEscape";
        case CertificateKind::CapExhausted: return "CapExhausted";
    }
    return "?";
}

namespace {

bool is_edge_jump(const BoundaryPoint& pred, const BoundaryPoint& succ) {
    if (pred.s == 0) return true;
    return pred.edge != succ.edge && succ.s != 0;
}

std::size_t endpoint_bits(const BoundaryPoint& bp) {
    return std::max(integer_bits(bp.s.get_num()), integer_bits(bp.s.get_den()));
}

}  // namespace

std::optional<Certificate> detect_progress(const Polygon& p, const SequenceState& state) {
    const auto& xs = state.points;
    int n = p.size();
    std::map<BoundaryPoint, int, BoundaryPointKeyLess> seen;
    int jumps = 0;
    for (int t = 0; t < static_cast<int>(xs.size()); ++t) {
        auto [it, fresh] = seen.emplace(xs[t], t);
        if (!fresh) {
            Certificate c;
            c.kind = CertificateKind::Repetition;
            c.first_index = it->second;
            c.second_index = t;
            return c;
        }
        if (state.k >= 1 && t > state.k) {
            int k = state.k;
            int m = ((t - 1) % k) + 1;
            const BoundaryPoint& base = xs[m - 1];
            const BoundaryPoint& prev_local = xs[t - k];
            // Negative fingerprint: x_t in [base, prev_local). Equality with
            // base would be a repetition, handled above.
            Rational len = arc_forward(p, base, prev_local);
            Rational d = arc_forward(p, base, xs[t]);
            if (!(d < len)) {
                Certificate c;
                c.kind = CertificateKind::PositiveFingerprint;
                c.witness_index = t;
                return c;
            }
            if (is_edge_jump(prev_local, xs[t])) ++jumps;
            if (jumps >= n + 1) {
                Certificate c;
                c.kind = CertificateKind::EdgeJumpEscape;
                c.witness_index = t;
                return c;
            }
        }
    }
    return std::nullopt;
}

SequenceState run_sequence(const Polygon& p, const BoundaryPoint& x0, long cap,
                           VisibilityCache* cache) {
    int n = p.size();
    SequenceState st;
    st.points.push_back(x0);
    st.cumulative_arc = 0;
    st.max_scalar_bits.push_back(endpoint_bits(x0));

    VisibilityCache local_cache(p);
    if (!cache) cache = &local_cache;

    long hard_cap = cap;
    while (true) {
        long taken = static_cast<long>(st.steps.size());
        if (st.first_wrap_index < 0 && taken > n + 2)
            throw std::logic_error("first revolution did not close within n steps");
        if (st.first_wrap_index >= 0 && taken >= hard_cap) {
            Certificate c;
            c.kind = CertificateKind::CapExhausted;
            st.certificate = c;
            return st;
        }
        GreedyStep gs = greedy_interval(p, st.points.back(), cache);
        if (gs.full_wrap)
            throw std::logic_error("greedy sequence started on a star-shaped polygon");
        st.cumulative_arc += arc_forward(p, gs.start, gs.end);
        st.steps.push_back(gs);
        st.points.push_back(gs.end);
        st.max_scalar_bits.push_back(endpoint_bits(gs.end));
        if (st.first_wrap_index < 0 && st.cumulative_arc >= n) {
            st.first_wrap_index = static_cast<int>(st.points.size()) - 1;
            st.k = st.first_wrap_index - 1;
            if (st.k < 1) throw std::logic_error("degenerate first revolution");
            // The cap counts steps; k is only known now.
            hard_cap = cap;
        }
        // Edge-jump bookkeeping for reporting.
        if (st.k >= 1) {
            int t = static_cast<int>(st.points.size()) - 1;
            if (t > st.k && is_edge_jump(st.points[t - st.k], st.points[t])) ++st.edge_jumps;
        }
        if (auto c = detect_progress(p, st)) {
            st.certificate = c;
            return st;
        }
    }
}

Solution extract_solution(const Polygon& p, const SequenceState& state, VisibilityCache* cache) {
    if (!state.certificate || state.certificate->kind == CertificateKind::CapExhausted ||
        state.certificate->kind == CertificateKind::StarShaped)
        throw MalformedState("extraction requires a terminated non-cap certificate");
    const Certificate& cert = *state.certificate;
    int anchor = cert.kind == CertificateKind::Repetition ? cert.second_index
                                                          : cert.witness_index;
    if (anchor < 0 || anchor >= static_cast<int>(state.points.size()))
        throw MalformedState("certificate witness out of range");

    std::vector<BoundaryPoint> xs = state.points;
    std::vector<GreedyStep> steps = state.steps;
    const BoundaryPoint& star = xs[anchor];

    VisibilityCache local_cache(p);
    if (!cache) cache = &local_cache;

    // Find the step whose half-open interval (x_{T-1}, x_T] wraps back onto
    // the certified optimal endpoint, extending the sequence if needed.
    auto wraps_onto = [&](int t) {
        Rational len = arc_forward(p, xs[t - 1], xs[t]);
        Rational d = arc_forward(p, xs[t - 1], star);
        return d > 0 && d <= len;
    };
    int T = -1;
    for (int t = anchor + 1; t < static_cast<int>(xs.size()); ++t) {
        if (wraps_onto(t)) {
            T = t;
            break;
        }
    }
    int safety = p.size() + 3;
    while (T < 0 && safety-- > 0) {
        GreedyStep gs = greedy_interval(p, xs.back(), cache);
        if (gs.full_wrap) throw MalformedState("unexpected star-shaped wrap during extraction");
        steps.push_back(gs);
        xs.push_back(gs.end);
        if (wraps_onto(static_cast<int>(xs.size()) - 1)) T = static_cast<int>(xs.size()) - 1;
    }
    if (T < 0) throw MalformedState("no wrapping step found during extraction");

    Solution sol;
    sol.certificate = cert;
    for (int t = anchor; t < T; ++t) sol.chains.push_back(steps[t]);
    // Clip the closing chain so the chains partition the boundary exactly.
    sol.chains.back().end = star;
    sol.size = static_cast<int>(sol.chains.size());
    return sol;
}

Solution solve(const Polygon& p, const SolveOptions& options, SolveStats* stats) {
    if (auto kernel = kernel_nonempty(p)) {
        Solution sol;
        GreedyStep chain;
        chain.start = vertex_point(p, 0);
        chain.end = chain.start;
        chain.guard = *kernel;
        chain.full_wrap = true;
        sol.chains.push_back(chain);
        sol.size = 1;
        sol.certificate.kind = CertificateKind::StarShaped;
        if (stats) {
            stats->steps = 1;
            stats->revolutions = 1;
            stats->first_revolution_chains = 1;
        }
        return sol;
    }
    BoundaryPoint x0 = options.start ? *options.start : vertex_point(p, 0);
    int n = p.size();
    long cap = options.cap_constant;
    // cap = c * k^2 * n^3 with k <= n: computed without knowing k yet.
    cap *= static_cast<long>(n) * n * static_cast<long>(n) * n * n;

    VisibilityCache cache(p);
    SequenceState st = run_sequence(p, x0, cap, &cache);
    if (!st.certificate || st.certificate->kind == CertificateKind::CapExhausted) {
        throw CapExhaustedError("no progress condition within the step cap; reproducer: " +
                                polygon_to_json(p));
    }
    if (stats) {
        stats->steps = static_cast<int>(st.steps.size());
        mpz_class revs = (st.cumulative_arc / n).get_num() / (st.cumulative_arc / n).get_den();
        stats->revolutions = static_cast<int>(revs.get_si());
        stats->first_revolution_chains = st.first_wrap_index;
        stats->bits_per_step.assign(st.max_scalar_bits.begin(), st.max_scalar_bits.end());
        stats->max_scalar_bits = *std::max_element(st.max_scalar_bits.begin(),
                                                   st.max_scalar_bits.end());
    }
    return extract_solution(p, st, &cache);
}

namespace {

nlohmann::json boundary_point_json(const BoundaryPoint& bp) {
    return nlohmann::json::array({bp.edge, format_rational(bp.s)});
}

BoundaryPoint boundary_point_from_json(const Polygon& p, const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw MalformedNumber("boundary point must be [edge, s]");
    int edge = j[0].get<int>();
    Rational s = j[1].is_string() ? parse_rational(j[1].get<std::string>())
                                  : Rational(static_cast<long>(j[1].get<long long>()));
    if (edge < 0 || edge >= p.size() || s < 0 || s >= 1)
        throw MalformedNumber("boundary point outside the polygon parameterization");
    return BoundaryPoint(edge, s);
}

}  // namespace

std::string solution_to_json(const Polygon& p, const Solution& s) {
    nlohmann::json chains = nlohmann::json::array();
    for (const GreedyStep& c : s.chains) {
        nlohmann::json jc;
        jc["start"] = boundary_point_json(c.start);
        jc["end"] = boundary_point_json(c.end);
        jc["guard"] = {format_rational(c.guard.x), format_rational(c.guard.y)};
        chains.push_back(jc);
    }
    nlohmann::json doc;
    doc["size"] = s.size;
    doc["certificate"] = certificate_kind_name(s.certificate.kind);
    doc["chains"] = chains;
    return doc.dump(2);
}

Solution solution_from_json(const Polygon& p, const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedNumber(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("chains") || !doc.contains("size"))
        throw MalformedNumber("solution document needs size and chains");
    Solution s;
    s.size = doc["size"].get<int>();
    std::string cert = doc.value("certificate", "Repetition");
    if (cert == "StarShaped") s.certificate.kind = CertificateKind::StarShaped;
    else if (cert == "Repetition") s.certificate.kind = CertificateKind::Repetition;
    else if (cert == "PositiveFingerprint") s.certificate.kind = CertificateKind::PositiveFingerprint;
    else if (cert == "EdgeJumpEscape") s.certificate.kind = CertificateKind::EdgeJumpEscape;
    else if (cert == "CapExhausted") s.certificate.kind = CertificateKind::CapExhausted;
    else throw MalformedNumber("unknown certificate kind: " + cert);
    for (const auto& jc : doc["chains"]) {
        GreedyStep c;
        c.start = boundary_point_from_json(p, jc.at("start"));
        c.end = boundary_point_from_json(p, jc.at("end"));
        const auto& g = jc.at("guard");
        c.guard = Point(g[0].is_string() ? parse_rational(g[0].get<std::string>())
                                         : Rational(static_cast<long>(g[0].get<long long>())),
                        g[1].is_string() ? parse_rational(g[1].get<std::string>())
                                         : Rational(static_cast<long>(g[1].get<long long>())));
        if (c.start == c.end && s.size == 1) c.full_wrap = true;
        s.chains.push_back(c);
    }
    if (static_cast<int>(s.chains.size()) != s.size)
        throw MalformedNumber("size field disagrees with the chain count");
    return s;
}

}  // namespace cag
