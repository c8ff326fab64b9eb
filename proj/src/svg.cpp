#include "cag/svg.hpp"

#include <sstream>

#include "cag/visibility.hpp"

namespace cag {

namespace {

double approx(const Rational& r) { return r.get_d(); }

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#17becf", "#8c564b", "#e377c2"};

struct Frame {
    double minx, miny, maxx, maxy, pad, stroke;
};

Frame frame_of(const Polygon& p) {
    Frame f{1e300, 1e300, -1e300, -1e300, 0, 0};
    for (const Point& v : p.vertices()) {
        f.minx = std::min(f.minx, approx(v.x));
        f.miny = std::min(f.miny, approx(v.y));
        f.maxx = std::max(f.maxx, approx(v.x));
        f.maxy = std::max(f.maxy, approx(v.y));
    }
    double span = std::max(f.maxx - f.minx, f.maxy - f.miny);
    if (span <= 0) span = 1;
    f.pad = span * 0.05;
    f.stroke = span / 200.0;
    return f;
}

void open_svg(std::ostringstream& out, const Frame& f) {
    // Flip y so that y-up input coordinates render upright.
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << f.minx - f.pad << ' '
        << -(f.maxy + f.pad) << ' ' << (f.maxx - f.minx) + 2 * f.pad << ' '
        << (f.maxy - f.miny) + 2 * f.pad << "\">\n";
}

void polyline(std::ostringstream& out, const std::vector<Point>& pts, const char* color,
              double width, bool closed, const char* dash = nullptr,
              const char* fill = "none") {
    out << (closed ? "<polygon" : "<polyline") << " points=\"";
    for (const Point& q : pts) out << approx(q.x) << ',' << -approx(q.y) << ' ';
    out << "\" fill=\"" << fill << "\" stroke=\"" << color << "\" stroke-width=\"" << width
        << '"';
    if (dash) out << " stroke-dasharray=\"" << dash << '"';
    out << "/>\n";
}

void dot(std::ostringstream& out, const Point& q, const char* color, double r) {
    out << "<circle cx=\"" << approx(q.x) << "\" cy=\"" << -approx(q.y) << "\" r=\"" << r
        << "\" fill=\"" << color << "\"/>\n";
}

std::vector<Point> chain_polyline(const Polygon& p, const BoundaryPoint& from,
                                  const BoundaryPoint& to, bool full) {
    std::vector<Point> pts;
    pts.push_back(boundary_to_point(p, from));
    Rational len = full ? Rational(p.size()) : arc_forward(p, from, to);
    for (int step = 0; step <= p.size(); ++step) {
        int v = p.index(from.edge + 1 + step);
        Rational d = arc_forward(p, from, vertex_point(p, v));
        if (d == 0 && full) d = p.size();
        if (d > 0 && d < len) pts.push_back(p.vertex(v));
    }
    Point e = boundary_to_point(p, to);
    if (pts.back() != e || full) pts.push_back(e);
    return pts;
}

}  // namespace

std::string render_svg(const Polygon& p, const Solution* sol) {
    Frame f = frame_of(p);
    std::ostringstream out;
    open_svg(out, f);
    std::vector<Point> outline = p.vertices();
    polyline(out, outline, "#222222", f.stroke, true);
    if (sol) {
        for (std::size_t i = 0; i < sol->chains.size(); ++i) {
            const GreedyStep& c = sol->chains[i];
            const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
            std::vector<Point> pts = chain_polyline(p, c.start, c.end, c.full_wrap);
            polyline(out, pts, color, f.stroke * 2.2, false);
            // Dashed sight lines to the chain endpoints.
            polyline(out, {c.guard, pts.front()}, color, f.stroke * 0.8, false, "2,2");
            polyline(out, {c.guard, pts.back()}, color, f.stroke * 0.8, false, "2,2");
            dot(out, c.guard, color, f.stroke * 3);
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_region_svg(const Polygon& p, const Region& region) {
    Frame f = frame_of(p);
    std::ostringstream out;
    open_svg(out, f);
    polyline(out, p.vertices(), "#222222", f.stroke, true);
    for (const auto& loop : region.areas())
        polyline(out, loop, "#2ca02c", f.stroke, true, nullptr, "#2ca02c33");
    for (const Segment& s : region.segments())
        polyline(out, {s.a, s.b}, "#2ca02c", f.stroke * 1.5, false);
    for (const Point& q : region.points()) dot(out, q, "#2ca02c", f.stroke * 2.5);
    out << "</svg>\n";
    return out.str();
}

}  // namespace cag
