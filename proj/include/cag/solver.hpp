#ifndef CAG_SOLVER_HPP
#define CAG_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cag/polygon.hpp"
#include "cag/region.hpp"
#include "cag/visibility.hpp"

namespace cag {

struct CapExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One greedy step: the guard sees the whole clockwise chain [start, end].
struct GreedyStep {
    BoundaryPoint start;
    BoundaryPoint end;
    Point guard;
    bool full_wrap = false;  // star-shaped direct call: chain is all of the boundary
};

// Maximal visible interval from x clockwise, with its guard. Never returns
// end == start unless the polygon is star-shaped (full_wrap set).
GreedyStep greedy_interval(const Polygon& p, const BoundaryPoint& x,
                           VisibilityCache* cache = nullptr);

enum class CertificateKind {
    StarShaped,
    Repetition,
    PositiveFingerprint,
    EdgeJumpEscape,
    CapExhausted
};

std::string certificate_kind_name(CertificateKind k);

struct Certificate {
    CertificateKind kind;
    // Repetition: first_index/second_index with x[first] == x[second].
    // PositiveFingerprint / EdgeJumpEscape: witness_index of the certified
    // optimal endpoint.
    int first_index = -1;
    int second_index = -1;
    int witness_index = -1;
};

struct SequenceState {
    std::vector<GreedyStep> steps;      // step i produced endpoint x_{i+1}
    std::vector<BoundaryPoint> points;  // x_0, x_1, ... (endpoints)
    int k = -1;                         // steps in the first revolution minus one
    int first_wrap_index = -1;          // smallest m with cumulative arc >= n
    Rational cumulative_arc;            // total clockwise arc covered
    int edge_jumps = 0;                 // across all local greedy sequences
    std::optional<Certificate> certificate;
    std::vector<std::size_t> max_scalar_bits;  // per endpoint: max(<s_num>, <s_den>)
};

// Runs the greedy sequence from x0 until a progress condition fires or the
// step cap is reached, recording everything needed for the certificates.
SequenceState run_sequence(const Polygon& p, const BoundaryPoint& x0, long cap,
                           VisibilityCache* cache = nullptr);

// Checks the recorded state for a certificate. Exposed for tests; run_sequence
// applies it after every step.
std::optional<Certificate> detect_progress(const Polygon& p, const SequenceState& state);

struct Solution {
    std::vector<GreedyStep> chains;  // consecutive; partition the boundary exactly
    int size = 0;
    Certificate certificate;
};

// Chains of the final revolution, clipped so they exactly partition the
// boundary. Requires a certificate other than CapExhausted.
Solution extract_solution(const Polygon& p, const SequenceState& state,
                          VisibilityCache* cache = nullptr);

struct SolveOptions {
    std::optional<BoundaryPoint> start;  // default: vertex 0
    long cap_constant = 8;               // cap = constant * k^2 * n^3
};

struct SolveStats {
    int steps = 0;
    int revolutions = 0;  // completed revolutions until the certificate fired
    int first_revolution_chains = 0;
    std::size_t max_scalar_bits = 0;
    std::vector<std::size_t> bits_per_step;
};

Solution solve(const Polygon& p, const SolveOptions& options = {}, SolveStats* stats = nullptr);

std::string solution_to_json(const Polygon& p, const Solution& s);
Solution solution_from_json(const Polygon& p, const std::string& text);

}  // namespace cag

#endif
