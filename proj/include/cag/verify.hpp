#ifndef CAG_VERIFY_HPP
#define CAG_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cag/polygon.hpp"
#include "cag/restricted.hpp"
#include "cag/solver.hpp"

namespace cag {

struct GenerationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerifyReport {
    bool pass = true;
    std::string first_violation;  // empty when pass
};

// Independent solution check: chains partition the boundary exactly, each
// guard sees its chain's endpoints and every vertex inside it, plus interior
// spot checks at s = 1/3, 1/2, 2/3 of each covered edge.
VerifyReport verify_solution(const Polygon& p, const Solution& sol);
VerifyReport verify_restricted(const Polygon& p, const RestrictedSolution& sol);

// (steps in one revolution from x) - 1; a lower bound on the optimum.
// Precondition: p is not star-shaped.
int lower_bound(const Polygon& p, const BoundaryPoint& x);

// Deterministic random simple polygon on the integer grid [0, 2^16)^2,
// built by random placement plus 2-opt uncrossing.
Polygon random_polygon(int n, std::uint64_t seed);

struct BenchRow {
    int trial;
    std::uint64_t seed;
    int n;
    int k;
    int revolutions;
    std::string certificate;
    std::size_t max_bits;
    long wall_time_ms;
};

struct BenchParams {
    int trials = 100;
    int n_min = 6;
    int n_max = 12;
    std::uint64_t seed = 1;
};

std::vector<BenchRow> bench_revolutions(const BenchParams& params);
std::string bench_csv(const std::vector<BenchRow>& rows);

// Checks that the endpoint scalar bit length grows at most linearly with the
// step index: max_bits(t) <= b0 + c * t * N for the fitted slope c, with c
// below a fixed ceiling.
struct BitGrowthReport {
    bool pass = true;
    double fitted_c = 0.0;
    double r_squared = 1.0;
};

BitGrowthReport bit_growth_check(const std::vector<std::size_t>& bits_per_step,
                                 std::size_t input_bits);

// Total input encoding size of the polygon per the bit-complexity model.
std::size_t polygon_input_bits(const Polygon& p);

}  // namespace cag

#endif
