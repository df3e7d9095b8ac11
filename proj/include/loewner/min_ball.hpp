#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "loewner/cone_geom.hpp"

namespace loewner {

/// Iteration budget for solve_meb. Either a target epsilon > 0 (which maps
/// to l = ceil(1/epsilon^2) iterations) or an explicit iteration count;
/// an explicit count takes precedence when both are set. Ties in
/// farthest-ball selection always break toward the lowest index.
struct MebConfig {
    double epsilon = 0.0;
    std::optional<std::int64_t> iterations;

    static MebConfig from_epsilon(double eps);
    static MebConfig from_iterations(std::int64_t l);

    std::int64_t iteration_count() const;
};

/// Result of the approximate minimum-enclosing-ball solve. The reported
/// radius is the exact enclosing radius of the returned center, so the
/// reported ball always covers every input. certified_ratio is
/// radius / L where L is a proven lower bound on the optimal radius.
struct MebResult {
    VecRep center;
    double radius = 0.0;
    std::int64_t iterations = 0;
    std::vector<int> coreset;  // distinct input indices, first-selection order
    double certified_ratio = 1.0;
};

/// Farthest distance from point q to ball b: ||q - center|| + radius.
double farthest_distance(const VecRep& q, const Ball& b);

/// One circumcenter update toward the farthest point of ball farthest:
/// e' = e + (F - e) / (i + 1) with F = c + r (c - e)/||c - e||. When e and
/// c coincide (||c - e|| <= 1e-300) the farthest-point direction is taken
/// along the first coordinate axis.
VecRep bc_step(const VecRep& e, std::int64_t i, const Ball& farthest);

/// Iterative approximate minimum enclosing ball of balls. Starts at the
/// center of the first ball, runs the configured number of
/// farthest-selection + bc_step rounds, and certifies the result against
/// the pairwise lower bound max((||c_i - c_j|| + r_i + r_j)/2) and the
/// largest input radius. Pairs are scanned exhaustively for n <= 1024 and
/// over a deterministic subsample (including all core-set members) above.
MebResult solve_meb(std::span<const Ball> balls, const MebConfig& cfg);

/// Closed-form minimum enclosing ball of two balls (test oracle): the
/// containing ball if one contains the other, otherwise the ball spanning
/// the two farthest-apart boundary points along the center line.
std::pair<VecRep, double> exact_two_ball(const Ball& b1, const Ball& b2);

} // namespace loewner
