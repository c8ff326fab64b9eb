#include "cag/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "cag/visibility.hpp"

namespace cag {

namespace {

struct ChainView {
    BoundaryPoint start;
    BoundaryPoint end;
    Point guard;
    bool full_wrap;
};

VerifyReport verify_chains(const Polygon& p, const std::vector<ChainView>& chains) {
    VerifyReport rep;
    auto fail = [&](const std::string& msg) {
        rep.pass = false;
        rep.first_violation = msg;
        return rep;
    };
    if (chains.empty()) return fail("no chains");
    int n = p.size();

    if (chains.size() == 1 && chains[0].full_wrap) {
        const ChainView& c = chains[0];
        if (!point_in_polygon(p, c.guard)) return fail("guard outside the polygon");
        for (int j = 0; j < n; ++j)
            if (!sees(p, c.guard, p.vertex(j)))
                return fail("full-boundary guard misses vertex " + std::to_string(j));
        return rep;
    }

    // Contiguity and exact partition.
    Rational total = 0;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const ChainView& c = chains[i];
        const ChainView& nxt = chains[(i + 1) % chains.size()];
        if (!(c.end == nxt.start))
            return fail("chain " + std::to_string(i) + " does not meet the next chain");
        Rational len = arc_forward(p, c.start, c.end);
        if (len == 0) return fail("chain " + std::to_string(i) + " has zero length");
        total += len;
    }
    if (total != n) return fail("chains cover " + format_rational(total) + " of " +
                                std::to_string(n) + " boundary units");

    // Guard visibility: endpoints, interior vertices, and spot checks.
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const ChainView& c = chains[i];
        if (!point_in_polygon(p, c.guard))
            return fail("guard of chain " + std::to_string(i) + " outside the polygon");
        if (!sees(p, c.guard, boundary_to_point(p, c.start)))
            return fail("guard of chain " + std::to_string(i) + " misses the chain start");
        if (!sees(p, c.guard, boundary_to_point(p, c.end)))
            return fail("guard of chain " + std::to_string(i) + " misses the chain end");
        Rational len = arc_forward(p, c.start, c.end);
        for (int j = 0; j < n; ++j) {
            Rational d = arc_forward(p, c.start, vertex_point(p, j));
            if (d > 0 && d < len && !sees(p, c.guard, p.vertex(j)))
                return fail("guard of chain " + std::to_string(i) + " misses vertex " +
                            std::to_string(j));
        }
        // Spot checks at fixed parameters of every covered edge piece.
        static const Rational probes[3] = {Rational(1, 3), Rational(1, 2), Rational(2, 3)};
        for (int j = 0; j < n; ++j) {
            for (const Rational& s : probes) {
                BoundaryPoint bp(j, s);
                Rational d = arc_forward(p, c.start, bp);
                if (d <= 0 || d >= len) continue;
                if (!sees(p, c.guard, boundary_to_point(p, bp)))
                    return fail("guard of chain " + std::to_string(i) +
                                " misses an interior point of edge " + std::to_string(j));
            }
        }
    }
    return rep;
}

}  // namespace

VerifyReport verify_solution(const Polygon& p, const Solution& sol) {
    std::vector<ChainView> chains;
    for (const GreedyStep& c : sol.chains)
        chains.push_back({c.start, c.end, c.guard, c.full_wrap});
    if (static_cast<int>(chains.size()) != sol.size) {
        VerifyReport rep;
        rep.pass = false;
        rep.first_violation = "size field disagrees with the chain count";
        return rep;
    }
    return verify_chains(p, chains);
}

VerifyReport verify_restricted(const Polygon& p, const RestrictedSolution& sol) {
    std::vector<ChainView> chains;
    for (const Arc& a : sol.chains) {
        bool full = a.interval.start == a.interval.end && sol.chains.size() == 1;
        chains.push_back({a.interval.start, a.interval.end, a.guard, full});
    }
    VerifyReport rep = verify_chains(p, chains);
    if (!rep.pass) return rep;
    if (sol.mode == RestrictedMode::GuardVertexRestricted) {
        for (std::size_t i = 0; i < sol.chains.size(); ++i) {
            bool is_vertex = false;
            for (int j = 0; j < p.size(); ++j)
                if (p.vertex(j) == sol.chains[i].guard) is_vertex = true;
            if (!is_vertex) {
                rep.pass = false;
                rep.first_violation = "guard of chain " + std::to_string(i) + " is not a vertex";
                return rep;
            }
        }
    } else {
        for (std::size_t i = 0; i < sol.chains.size(); ++i) {
            if (sol.chains[i].interval.start.s != 0 || sol.chains[i].interval.end.s != 0) {
                rep.pass = false;
                rep.first_violation = "chain " + std::to_string(i) + " endpoint is not a vertex";
                return rep;
            }
        }
    }
    return rep;
}

int lower_bound(const Polygon& p, const BoundaryPoint& x) {
    VisibilityCache cache(p);
    int n = p.size();
    Rational covered = 0;
    BoundaryPoint cur = x;
    int steps = 0;
    while (covered < n) {
        GreedyStep gs = greedy_interval(p, cur, &cache);
        if (gs.full_wrap) throw std::invalid_argument("lower_bound requires a non-star polygon");
        covered += arc_forward(p, gs.start, gs.end);
        cur = gs.end;
        if (++steps > n + 2) throw std::logic_error("revolution did not close");
    }
    return steps - 1;
}

Polygon random_polygon(int n, std::uint64_t seed) {
    if (n < 3) throw GenerationFailed("need at least 3 vertices");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(0, (1L << 16) - 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        // Distinct random grid points.
        std::vector<Point> pts;
        int tries = 0;
        while (static_cast<int>(pts.size()) < n && tries++ < 64 * n) {
            Point q(Rational(coord(rng)), Rational(coord(rng)));
            bool dup = false;
            for (const Point& e : pts)
                if (e == q) dup = true;
            if (!dup) pts.push_back(q);
        }
        if (static_cast<int>(pts.size()) < n) continue;

        // 2-opt uncrossing: reverse the subchain between any two crossing edges.
        bool clean = false;
        long limit = static_cast<long>(n) * n * n + 64;
        while (limit-- > 0) {
            bool crossed = false;
            for (int i = 0; i < n && !crossed; ++i) {
                for (int j = i + 1; j < n && !crossed; ++j) {
                    bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                    if (adjacent) continue;
                    SegmentIntersection s = intersect_segments(
                        pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]);
                    if (s.kind == SegmentIntersection::Kind::None) continue;
                    std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
                    crossed = true;
                }
            }
            if (!crossed) {
                clean = true;
                break;
            }
        }
        if (!clean) continue;
        try {
            return Polygon(pts);
        } catch (const PolygonError&) {
            continue;  // touching/degenerate leftovers: redraw
        }
    }
    throw GenerationFailed("no simple polygon after bounded retries (n=" + std::to_string(n) +
                           ", seed=" + std::to_string(seed) + ")");
}

std::vector<BenchRow> bench_revolutions(const BenchParams& params) {
    std::vector<BenchRow> rows;
    std::uint64_t seed = params.seed;
    int span = std::max(1, params.n_max - params.n_min + 1);
    for (int trial = 0; trial < params.trials; ++trial) {
        int n = params.n_min + trial % span;
        Polygon p = random_polygon(n, seed);
        while (kernel_nonempty(p)) {  // star-shaped inputs are not counted
            ++seed;
            p = random_polygon(n, seed);
        }
        auto t0 = std::chrono::steady_clock::now();
        SolveStats stats;
        Solution sol = solve(p, {}, &stats);
        auto t1 = std::chrono::steady_clock::now();
        BenchRow row;
        row.trial = trial;
        row.seed = seed;
        row.n = n;
        row.k = sol.size;
        row.revolutions = stats.revolutions;
        row.certificate = certificate_kind_name(sol.certificate.kind);
        row.max_bits = stats.max_scalar_bits;
        row.wall_time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        rows.push_back(row);
        ++seed;
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "trial,seed,n,k,revolutions,certificate,max_bits,wall_time_ms\n";
    for (const BenchRow& r : rows) {
        out << r.trial << ',' << r.seed << ',' << r.n << ',' << r.k << ',' << r.revolutions
            << ',' << r.certificate << ',' << r.max_bits << ',' << r.wall_time_ms << '\n';
    }
    return out.str();
}

BitGrowthReport bit_growth_check(const std::vector<std::size_t>& bits_per_step,
                                 std::size_t input_bits) {
    BitGrowthReport rep;
    if (bits_per_step.size() < 3 || input_bits == 0) return rep;
    double b0 = static_cast<double>(bits_per_step.front());
    double nn = static_cast<double>(input_bits);
    // Envelope constant: largest per-step amortized growth.
    double cmax = 0.0;
    for (std::size_t t = 1; t < bits_per_step.size(); ++t) {
        double g = (static_cast<double>(bits_per_step[t]) - b0) / (static_cast<double>(t) * nn);
        cmax = std::max(cmax, g);
    }
    // Least-squares fit bits ~ a + m*t.
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    double cnt = static_cast<double>(bits_per_step.size());
    for (std::size_t t = 0; t < bits_per_step.size(); ++t) {
        double xx = static_cast<double>(t);
        double yy = static_cast<double>(bits_per_step[t]);
        sx += xx;
        sy += yy;
        sxx += xx * xx;
        sxy += xx * yy;
        syy += yy * yy;
    }
    double denom = cnt * sxx - sx * sx;
    double m = denom != 0 ? (cnt * sxy - sx * sy) / denom : 0.0;
    double ss_tot = syy - sy * sy / cnt;
    double a = (sy - m * sx) / cnt;
    double ss_res = 0;
    for (std::size_t t = 0; t < bits_per_step.size(); ++t) {
        double e = static_cast<double>(bits_per_step[t]) - (a + m * static_cast<double>(t));
        ss_res += e * e;
    }
    rep.fitted_c = m / nn;
    rep.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    // Linear growth with a bounded constant; the ceiling is generous against
    // the per-step O(N) bound.
    rep.pass = cmax <= 8.0;
    return rep;
}

std::size_t polygon_input_bits(const Polygon& p) {
    std::size_t total = 0;
    for (const Point& v : p.vertices()) total += scalar_bits(v.x) + scalar_bits(v.y);
    return total;
}

}  // namespace cag
