#include "cag/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cag {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s.erase(s.begin());
    }
    if (s.empty()) throw std::invalid_argument("sign without digits: '" + text + "'");

    Rational result;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed fraction: '" + text + "'");
        mpz_class n(num), d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
        result = make_rational(n, d);
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (frac.empty()) frac = "0";
        if (!all_digits(whole) || !all_digits(frac))
            throw std::invalid_argument("malformed decimal: '" + text + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class n = mpz_class(whole) * scale + mpz_class(frac);
        result = make_rational(n, scale);
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed integer: '" + text + "'");
        result = Rational(mpz_class(s));
    }
    if (neg) result = -result;
    return result;
}

std::string format_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::size_t integer_bits(const mpz_class& v) {
    if (v == 0) return 1;
    mpz_class a = abs(v);
    // ceil(log2(a+1)) equals the bit length of a.
    return 1 + mpz_sizeinbase(a.get_mpz_t(), 2);
}

std::size_t scalar_bits(const Rational& r) {
    return integer_bits(r.get_num()) + integer_bits(r.get_den());
}

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

std::string format_point(const Point& p) {
    return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")";
}

Rational cross(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orient(const Point& p, const Point& q, const Point& r) {
    int s = sgn(cross(p, q, r));
    if (s == 0) return Orientation::Collinear;
    // Positive cross product means a left turn in y-up coordinates.
    return s > 0 ? Orientation::CounterClockwise : Orientation::Clockwise;
}

Rational dist2(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

bool segment_contains(const Point& a, const Point& b, const Point& p) {
    if (orient(a, b, p) != Orientation::Collinear) return false;
    if (a.x != b.x) {
        if (a.x < b.x) return a.x <= p.x && p.x <= b.x;
        return b.x <= p.x && p.x <= a.x;
    }
    if (a.y < b.y) return a.y <= p.y && p.y <= b.y;
    return b.y <= p.y && p.y <= a.y;
}

std::optional<Point> line_intersection(const Point& a1, const Point& a2,
                                       const Point& b1, const Point& b2) {
    if (a1 == a2 || b1 == b2)
        throw std::invalid_argument("line through coincident endpoints");
    Point da = a2 - a1;
    Point db = b2 - b1;
    Rational denom = da.x * db.y - da.y * db.x;
    if (denom == 0) return std::nullopt;
    Rational t = ((b1.x - a1.x) * db.y - (b1.y - a1.y) * db.x) / denom;
    return Point{a1.x + t * da.x, a1.y + t * da.y};
}

std::optional<Rational> line_intersection_param(const Point& a1, const Point& a2,
                                                const Point& c, const Point& d) {
    if (a1 == a2 || c == d)
        throw std::invalid_argument("line through coincident endpoints");
    // Points on the target line: p(t) = t*c + (1-t)*d = d + t*(c - d).
    Rational denom = cross(a1, a2, c) - cross(a1, a2, d);
    if (denom == 0) return std::nullopt;
    Rational t = -cross(a1, a2, d) / denom;
    return t;
}

Point affine_combination(const Rational& t, const Point& c, const Point& d) {
    Rational u = 1 - t;
    return {t * c.x + u * d.x, t * c.y + u * d.y};
}

}  // namespace cag
