#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "loewner/min_ball.hpp"

namespace loewner {

/// Options for lowner_sup / lowner_inf. An explicit iteration count
/// overrides the epsilon-derived one (same convention as MebConfig).
struct SupConfig {
    double epsilon = 1e-2;
    std::optional<std::int64_t> iterations;
};

/// Approximate Loewner-maximal (or minimal) matrix together with its
/// certificates. certified_trace_ratio bounds tr(result') against the
/// optimal trace in the zero-shifted frame (it equals the enclosing-ball
/// radius ratio); certified_trace_ratio_original is the same certificate
/// transported back to the input frame, +infinity when the transported
/// lower bound is not positive. dominance_margin is the smallest
/// lambda_min(result - S_i) observed across the inputs.
struct SupremumResult {
    SymMat matrix;
    double epsilon_requested = 0.0;
    double certified_trace_ratio = 1.0;
    double certified_trace_ratio_original = 1.0;
    std::vector<int> coreset_indices;
    std::int64_t iterations = 0;
    double dominance_margin = 0.0;
};

/// N-dimensional grid of same-dimension symmetric matrices, cells stored
/// row-major (last axis fastest).
class MatrixField {
public:
    MatrixField(std::vector<int> shape, std::vector<SymMat> cells);

    const std::vector<int>& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    int matrix_dim() const { return cells_.front().dim(); }
    const SymMat& cell(int flat) const { return cells_[static_cast<size_t>(flat)]; }
    const std::vector<SymMat>& cells() const { return cells_; }

    std::vector<int> unflatten(int flat) const;
    int flatten(std::span<const int> coords) const;

private:
    std::vector<int> shape_;
    std::vector<SymMat> cells_;
};

/// Structuring element: a list of integer offsets, each of the field rank.
using WindowOffsets = std::vector<std::vector<int>>;

/// Tightest dominating matrix of the input set, approximated to (1+eps):
/// trace-shift, map to basis balls, solve the enclosing ball, map the apex
/// back, unshift. If one input already dominates all others it is returned
/// exactly with ratio 1. d = 1 inputs reduce to the scalar maximum.
SupremumResult lowner_sup(std::span<const SymMat> mats, const SupConfig& cfg);
SupremumResult lowner_sup(std::span<const SymMat> mats, double epsilon);

/// Dual of lowner_sup via inversion: inverts every input (each must be
/// positive definite: lambda_min > 1e-10 * ||S||_F), takes the supremum,
/// and inverts back. The result is dominated by every input.
SupremumResult lowner_inf(std::span<const SymMat> mats, const SupConfig& cfg);
SupremumResult lowner_inf(std::span<const SymMat> mats, double epsilon);

/// Morphological dilation/erosion: each output cell is the lowner_sup /
/// lowner_inf of the cells under the window centered there, with the
/// window clipped at the field border. Erosion requires PD cells.
MatrixField field_dilate(const MatrixField& field, const WindowOffsets& window, double epsilon);
MatrixField field_erode(const MatrixField& field, const WindowOffsets& window, double epsilon);

/// Greedy farthest-first k-center clustering under the Frobenius distance
/// delta(S_i, S_j) = ||vec_plus(S_i) - vec_plus(S_j)||. First center is
/// index 0; the result is the standard 2-approximation of the optimal
/// k-center cost. assignment[i] is the input index of i's nearest center.
struct ClusterResult {
    std::vector<int> center_indices;
    std::vector<int> assignment;
    double cost = 0.0;
};

ClusterResult kcenter(std::span<const SymMat> mats, int k);

} // namespace loewner
