#pragma once

#include <span>
#include <utility>
#include <vector>

#include "loewner/sym_mat.hpp"

namespace loewner {

/// Ball in the vectorized symmetric-matrix space. Balls produced by
/// cone_to_ball always have their center in the zero-trace subspace; the
/// type itself only requires a non-negative radius.
struct Ball {
    VecRep center;
    double radius = 0.0;

    Ball(VecRep c, double r);
    int dim_d() const { return center.dim_d(); }
};

/// Scalar multiple of the identity subtracted from every input by
/// normalize_traces: t = min_i tr(S_i) / d, so that the smallest
/// transformed trace is zero.
struct NormalizationShift {
    double t = 0.0;
};

/// Shifts every matrix by -t * I with t = min_i tr(S_i) / d. After the
/// shift all traces are non-negative and the minimum trace is zero.
/// Undo with shift_diagonal(shift.t).
std::pair<std::vector<SymMat>, NormalizationShift>
normalize_traces(std::span<const SymMat> mats);

/// Basis ball of the dominance cone of s: center vec_plus(s - (tr(s)/d) I)
/// in the zero-trace subspace, radius tr(s) * sqrt(1 - 1/d). Requires a
/// non-negative trace (run normalize_traces first); |tr| below
/// 1e-12 * max(1, ||s||_F) clamps the radius to zero.
Ball cone_to_ball(const SymMat& s);

/// Apex of the dominance cone whose basis ball is b:
/// mat_from_vec(center) + (r/d) / sqrt(1 - 1/d) * I. Exact inverse of
/// cone_to_ball on its image. Rejects d = 1 (the basis degenerates).
SymMat ball_to_apex(const Ball& b);

/// True iff bp contains bq up to tolerance:
/// ||center_p - center_q|| <= radius_p - radius_q + tol.
bool ball_contains(const Ball& bp, const Ball& bq, double tol);

} // namespace loewner
