#ifndef CAG_RATIONAL_HPP
#define CAG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>

namespace cag {

// Exact arbitrary-precision rational. All geometry in this library is done in
// Q; no floating point enters any predicate. Values are kept canonical
// (reduced, positive denominator) by GMP; the factory functions below
// canonicalize inputs that arrive unreduced.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);

// Accepts "p/q", "p", decimal literals ("0.8" -> 4/5), with optional sign.
// Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

// Reduced form, "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

// Bit count of an integer including sign bit: 1 + ceil(log2(|v|+1)).
std::size_t integer_bits(const mpz_class& v);

// Bit count of a rational: <num> + <den>.
std::size_t scalar_bits(const Rational& r);

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);

std::string format_point(const Point& p);

enum class Orientation { Clockwise, CounterClockwise, Collinear };

// Exact cross product (q - p) x (r - p).
Rational cross(const Point& p, const Point& q, const Point& r);

Orientation orient(const Point& p, const Point& q, const Point& r);

// Squared euclidean distance; exact, used only for tie-breaking.
Rational dist2(const Point& a, const Point& b);

// True iff p lies on the closed segment [a, b].
bool segment_contains(const Point& a, const Point& b, const Point& p);

// Intersection of the infinite lines through (a1,a2) and (b1,b2).
// Empty when parallel (including collinear). Degenerate input
// (a1 == a2 or b1 == b2) throws std::invalid_argument.
std::optional<Point> line_intersection(const Point& a1, const Point& a2,
                                       const Point& b1, const Point& b2);

// Same intersection expressed on the target line as t*c + (1-t)*d.
std::optional<Rational> line_intersection_param(const Point& a1, const Point& a2,
                                                const Point& c, const Point& d);

// Evaluate t*c + (1-t)*d.
Point affine_combination(const Rational& t, const Point& c, const Point& d);

}  // namespace cag

#endif
