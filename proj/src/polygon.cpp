#include "cag/polygon.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace cag {

namespace {

Rational twice_area(const std::vector<Point>& v) {
    Rational a = 0;
    int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return a;
}

}  // namespace

SegmentIntersection intersect_segments(const Point& a, const Point& b, const Point& c,
                                       const Point& d) {
    SegmentIntersection out;
    Point ab = b - a;
    Point cd = d - c;
    Rational denom = ab.x * cd.y - ab.y * cd.x;
    if (denom != 0) {
        Rational t = ((c.x - a.x) * cd.y - (c.y - a.y) * cd.x) / denom;
        Rational u = ((c.x - a.x) * ab.y - (c.y - a.y) * ab.x) / denom;
        if (t < 0 || t > 1 || u < 0 || u > 1) return out;
        out.kind = SegmentIntersection::Kind::Point;
        out.t0 = t;
        out.p0 = {a.x + t * ab.x, a.y + t * ab.y};
        return out;
    }
    // Parallel. Distinct lines cannot meet.
    if (cross(a, b, c) != 0) return out;
    // Collinear: project c and d onto the parameter of [a,b].
    auto param = [&](const Point& p) -> Rational {
        if (ab.x != 0) return (p.x - a.x) / ab.x;
        return (p.y - a.y) / ab.y;
    };
    Rational tc = param(c), td = param(d);
    Rational lo = std::min(tc, td), hi = std::max(tc, td);
    Rational t0 = std::max(Rational(0), lo);
    Rational t1 = std::min(Rational(1), hi);
    if (t0 > t1) return out;
    if (t0 == t1) {
        out.kind = SegmentIntersection::Kind::Point;
        out.t0 = t0;
        out.p0 = {a.x + t0 * ab.x, a.y + t0 * ab.y};
        return out;
    }
    out.kind = SegmentIntersection::Kind::Overlap;
    out.t0 = t0;
    out.t1 = t1;
    out.p0 = {a.x + t0 * ab.x, a.y + t0 * ab.y};
    out.p1 = {a.x + t1 * ab.x, a.y + t1 * ab.y};
    return out;
}

void validate_simple(const std::vector<Point>& verts) {
    int n = static_cast<int>(verts.size());
    if (n < 3) throw TooFewVertices("polygon needs at least 3 vertices, got " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if (verts[i] == verts[(i + 1) % n])
            throw DuplicateConsecutiveVertex("vertices " + std::to_string(i) + " and " +
                                             std::to_string((i + 1) % n) + " coincide");
    }
    for (int i = 0; i < n; ++i) {
        Point a = verts[i], b = verts[(i + 1) % n];
        for (int j = i + 1; j < n; ++j) {
            Point c = verts[j], d = verts[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            SegmentIntersection x = intersect_segments(a, b, c, d);
            if (x.kind == SegmentIntersection::Kind::None) continue;
            if (adjacent) {
                // Adjacent edges must share exactly their common vertex.
                if (x.kind == SegmentIntersection::Kind::Overlap)
                    throw NotSimple("edges " + std::to_string(i) + " and " + std::to_string(j) +
                                        " overlap",
                                    i, j);
                Point shared = (j == i + 1) ? b : a;
                if (x.p0 != shared)
                    throw NotSimple("adjacent edges " + std::to_string(i) + " and " +
                                        std::to_string(j) + " touch off the shared vertex",
                                    i, j);
            } else {
                throw NotSimple(
                    "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect", i,
                    j);
            }
        }
    }
}

Polygon::Polygon(std::vector<Point> vertices) : verts_(std::move(vertices)) {
    validate_simple(verts_);
    area2_ = twice_area(verts_);
    if (area2_ == 0) throw NotSimple("polygon has zero area", 0, 0);
    if (area2_ > 0) {  // counterclockwise input: store clockwise
        std::reverse(verts_.begin(), verts_.end());
        area2_ = -area2_;
    }
}

BoundaryPoint canonical_boundary_point(const Polygon& p, int edge, const Rational& s) {
    int n = p.size();
    Rational ss = s;
    int e = p.index(edge);
    while (ss >= 1) {
        ss -= 1;
        e = (e + 1) % n;
    }
    while (ss < 0) {
        ss += 1;
        e = (e - 1 + n) % n;
    }
    return BoundaryPoint(e, ss);
}

BoundaryPoint vertex_point(const Polygon& p, int i) { return BoundaryPoint(p.index(i), 0); }

Point boundary_to_point(const Polygon& p, const BoundaryPoint& bp) {
    const Point& a = p.vertex(bp.edge);
    const Point& b = p.vertex(bp.edge + 1);
    Rational u = 1 - bp.s;
    return {u * a.x + bp.s * b.x, u * a.y + bp.s * b.y};
}

Rational boundary_tau(const Polygon& p, const BoundaryPoint& bp) {
    return Rational(bp.edge) + bp.s;
}

Rational arc_forward(const Polygon& p, const BoundaryPoint& a, const BoundaryPoint& b) {
    Rational d = boundary_tau(p, b) - boundary_tau(p, a);
    if (d < 0) d += p.size();
    return d;
}

std::strong_ordering boundary_cmp(const Polygon& p, const BoundaryPoint& origin,
                                  const BoundaryPoint& a, const BoundaryPoint& b) {
    Rational da = arc_forward(p, origin, a);
    Rational db = arc_forward(p, origin, b);
    if (da < db) return std::strong_ordering::less;
    if (da > db) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool interval_contains(const Polygon& p, const BoundaryInterval& iv, const BoundaryPoint& q) {
    bool include_start = iv.closure == IntervalClosure::Closed ||
                         iv.closure == IntervalClosure::HalfOpenRight;
    bool include_end =
        iv.closure == IntervalClosure::Closed || iv.closure == IntervalClosure::HalfOpenLeft;
    if (iv.start == iv.end) {
        // Single point (closed) or empty.
        return include_start && include_end && q == iv.start;
    }
    Rational len = arc_forward(p, iv.start, iv.end);
    Rational d = arc_forward(p, iv.start, q);
    if (d == 0) return include_start;
    if (d == len) return include_end;
    return d < len;
}

int edges_in_interval(const Polygon& p, const BoundaryInterval& iv) {
    if (iv.start == iv.end) return 0;
    Rational len = arc_forward(p, iv.start, iv.end);
    int count = 0;
    // Walk edge pieces from the start point.
    Rational covered = 0;
    int edge = iv.start.edge;
    Rational s = iv.start.s;
    while (covered < len) {
        Rational piece = Rational(1) - s;  // rest of current edge
        Rational take = std::min(piece, len - covered);
        if (take > 0) ++count;
        covered += take;
        edge = p.index(edge + 1);
        s = 0;
    }
    return count;
}

namespace {

Rational coord_from_json(const nlohmann::json& j) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
        if (j.is_number_unsigned()) return Rational(static_cast<unsigned long>(j.get<unsigned long long>()));
    } catch (const std::invalid_argument& e) {
        throw MalformedNumber(e.what());
    }
    throw MalformedNumber("coordinate must be a string rational or an integer, got " + j.dump());
}

}  // namespace

Polygon parse_polygon(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedNumber(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw MalformedNumber("expected object with a \"vertices\" array");
    std::vector<Point> verts;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            throw MalformedNumber("vertex must be a [x, y] pair, got " + v.dump());
        verts.emplace_back(coord_from_json(v[0]), coord_from_json(v[1]));
    }
    return Polygon(std::move(verts));
}

std::string polygon_to_json(const Polygon& p) {
    nlohmann::json verts = nlohmann::json::array();
    for (const Point& v : p.vertices())
        verts.push_back({format_rational(v.x), format_rational(v.y)});
    nlohmann::json doc;
    doc["vertices"] = verts;
    return doc.dump(2);
}

}  // namespace cag
