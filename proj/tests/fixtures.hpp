#ifndef CAG_TEST_FIXTURES_HPP
#define CAG_TEST_FIXTURES_HPP

#include <string>
#include <vector>

#include "cag/polygon.hpp"

namespace fixtures {

inline cag::Point P(const std::string& x, const std::string& y) {
    return cag::Point(cag::parse_rational(x), cag::parse_rational(y));
}

inline cag::Polygon square() {
    return cag::Polygon({P("0", "0"), P("4", "0"), P("4", "4"), P("0", "4")});
}

inline cag::Polygon lshape() {
    return cag::Polygon(
        {P("0", "0"), P("2", "0"), P("2", "1"), P("1", "1"), P("1", "2"), P("0", "2")});
}

// U-shaped gallery: a 5x3 box with a 3x2 notch, two arms reachable only by
// trading off how much of each wall a guard sees.
inline cag::Polygon comb() {
    return cag::Polygon({P("0", "0"), P("-5", "0"), P("-5", "3"), P("-4", "3"), P("-4", "1"),
                         P("-1", "1"), P("-1", "3"), P("0", "3")});
}

// 18-gon: a rectangular hall with two side lobes; the optimal partition needs
// two chains that start and end at non-vertex boundary points.
inline cag::Polygon lobed_frame() {
    return cag::Polygon({
        P("6", "10"),            // X
        P("12", "10"),           // B
        P("9.76", "9.2"),        // G
        P("10", "7.5"),          // J
        P("14", "8.34"),         // M
        P("14", "1.67"),         // Q
        P("10", "2.5"),          // K
        P("9.76", "0.8"),        // I
        P("12", "0"),            // C
        P("6", "0"),             // Y
        P("0", "0"),             // D
        P("2.24", "0.8"),        // H
        P("2", "2.5"),           // L
        P("-2", "1.67"),         // R
        P("-2", "8.34"),         // N
        P("2", "7.5"),           // F
        P("2.24", "9.2"),        // E
        P("0", "10"),            // A
    });
}

// 32-gon star with four bumpy tips; the optimum uses four guards, one per
// quadrant, at non-vertex positions.
inline cag::Polygon cross_star() {
    auto quadrant = [](int i, int j) {
        std::vector<cag::Point> q = {
            cag::Point(cag::Rational(1 * i), cag::Rational(1 * j)),
            cag::Point(cag::Rational(4 * i, 5), cag::Rational(7 * j, 5)),
            cag::Point(cag::Rational(7 * i, 5), cag::Rational(7 * j, 5)),
            cag::Point(cag::Rational(2 * i), cag::Rational(1 * j)),
            cag::Point(cag::Rational(2 * i), cag::Rational(4 * j, 5)),
            cag::Point(cag::Rational(12 * i, 5), cag::Rational(19 * j, 20)),
            cag::Point(cag::Rational(12 * i, 5), cag::Rational(1 * j, 2)),
            cag::Point(cag::Rational(2 * i), cag::Rational(2 * j, 5)),
        };
        return q;
    };
    std::vector<cag::Point> verts;
    auto add = [&](const std::vector<cag::Point>& q, bool reversed) {
        if (!reversed)
            for (const auto& v : q) verts.push_back(v);
        else
            for (auto it = q.rbegin(); it != q.rend(); ++it) verts.push_back(*it);
    };
    add(quadrant(1, 1), false);    // right-top: A..H
    add(quadrant(1, -1), true);    // right-bottom: H..A
    add(quadrant(-1, -1), false);  // left-bottom: A..H
    add(quadrant(-1, 1), true);    // left-top: H..A
    return cag::Polygon(verts);
}

// 27-gon with three hook-shaped arms; six guards cover the boundary
// contiguously while three suffice for the edge cover.
inline cag::Polygon pinwheel() {
    return cag::Polygon({
        P("0.8", "0.3"),                                      // h00
        P("1.8", "-0.2"),                                     // h01
        P("2.5", "0.0"),                                      // h02
        P("1.7", "1.6"),                                      // h03
        P("2.0", "0.5"),                                      // h04
        P("0.9301208850715019", "0.5172240161046361"),        // b00
        P("1.345427755869507", "1.210537978279261"),          // b01
        P("0.6333609120801347", "1.2220015638506319"),        // b02
        P("0.37268901556668577", "0.5261981285661453"),       // b03
        P("-0.6598076211353314", "0.5428203230275511"),       // h10
        P("-0.7267949192431118", "1.6588457268119896"),       // h11
        P("-1.2499999999999996", "2.165063509461097"),        // h12
        P("-2.235640646055102", "0.672243186433546"),         // h13
        P("-1.433012701892219", "1.4820508075688776"),        // h14
        P("-0.9129895799297773", "0.546896307010069"),        // b10
        P("-1.721070519370448", "0.5599056264000507"),        // b11
        P("-1.3749648537990262", "-0.06249414229983674"),     // b12
        P("-0.6420454545454548", "0.05965909090909144"),      // b13
        P("-0.14019237886466884", "-0.8428203230275508"),     // h20
        P("-1.0732050807568885", "-1.458845726811989"),       // h21
        P("-1.250000000000001", "-2.165063509461096"),        // h22
        P("0.5356406460551006", "-2.272243186433546"),        // h23
        P("-0.5669872981077817", "-1.982050807568877"),       // h24
        P("-0.017131305141725006", "-1.064120323114705"),     // b20
        P("0.3756427635009406", "-1.7704436046793115"),       // b21
        P("0.7416039417188911", "-1.1595074215507952"),       // b22
        P("0.26935643897876876", "-0.5858572194752367"),      // b23
    });
}

}  // namespace fixtures

#endif
