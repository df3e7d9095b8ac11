#pragma once

#include <span>
#include <vector>

#include "loewner/error.hpp"

namespace loewner {

class SymMat;

/// Isometric half-vectorization of a d x d symmetric matrix: a vector of
/// length D = d(d+1)/2 whose Euclidean norm equals the Frobenius norm of
/// the source matrix. Component order: the d diagonal entries first
/// (s11, s22, ..., sdd), then the off-diagonal entries s_ij for i < j in
/// lexicographic (i, j) order, each scaled by sqrt(2).
class VecRep {
public:
    VecRep(int dim_d, std::vector<double> data);

    int dim_d() const { return dim_d_; }
    int size() const { return static_cast<int>(data_.size()); }
    std::span<const double> data() const { return data_; }
    double operator[](int k) const { return data_[static_cast<size_t>(k)]; }

    static int packed_size(int dim_d) { return dim_d * (dim_d + 1) / 2; }

private:
    int dim_d_;
    std::vector<double> data_;
};

/// Dense symmetric matrix storing the lower triangle in row-major order
/// (s00, s10, s11, s20, s21, s22, ...). Symmetry is structural: (i, j) and
/// (j, i) address the same coefficient. All coefficients must be finite.
class SymMat {
public:
    explicit SymMat(int dim); // zero matrix

    static SymMat identity(int dim);
    static SymMat diagonal(std::span<const double> diag);
    /// Builds from the packed lower triangle, row-major. Throws on size
    /// mismatch or non-finite entries.
    static SymMat from_lower(int dim, std::vector<double> lower);
    /// Builds from a full row-major d*d array, symmetrizing as (s + s^T)/2.
    static SymMat from_full_rowmajor(int dim, std::span<const double> full);

    int dim() const { return dim_; }

    double operator()(int i, int j) const { return coeffs_[index(i, j)]; }
    void set(int i, int j, double value) { coeffs_[index(i, j)] = value; }

    std::span<const double> lower() const { return coeffs_; }
    std::vector<double> to_full_rowmajor() const;

    double trace() const;
    /// Frobenius norm. Accumulates squares in the vectorization order
    /// (diagonal first, then doubled off-diagonal terms) so that it agrees
    /// with the Euclidean norm of vec_plus() to a few ulps.
    double frob_norm() const;

    /// Largest relative asymmetry |a_ij - a_ji| of a full row-major array,
    /// measured against max(1, max |a_ij|). Used by loaders to warn.
    static double asymmetry(int dim, std::span<const double> full);

    SymMat& operator+=(const SymMat& rhs);
    SymMat& operator-=(const SymMat& rhs);
    SymMat& operator*=(double factor);
    /// Adds t to every diagonal entry (i.e. adds t * I).
    SymMat& shift_diagonal(double t);

    friend SymMat operator+(SymMat lhs, const SymMat& rhs) { return lhs += rhs; }
    friend SymMat operator-(SymMat lhs, const SymMat& rhs) { return lhs -= rhs; }
    friend SymMat operator*(double factor, SymMat m) { return m *= factor; }

private:
    size_t index(int i, int j) const;
    void require_same_dim(const SymMat& other) const;

    int dim_;
    std::vector<double> coeffs_;
};

/// Eigendecomposition S = V diag(lambda) V^T with eigenvalues ascending and
/// eigenvector k stored as column k of V.
struct EigenDecomp {
    int dim = 0;
    std::vector<double> eigenvalues;   // ascending
    std::vector<double> eigenvectors;  // row-major d*d, column k <-> eigenvalue k

    double vec(int component, int which) const {
        return eigenvectors[static_cast<size_t>(component) * dim + which];
    }
};

VecRep vec_plus(const SymMat& s);
SymMat mat_from_vec(const VecRep& v);

/// Cyclic Jacobi eigensolver with a fixed row-major sweep order and a fixed
/// convergence threshold (off-diagonal Frobenius norm <= 1e-14 * ||S||_F,
/// at most 30 sweeps). Deterministic for a given input.
EigenDecomp eigen_decompose(const SymMat& s);

/// Smallest eigenvalue of s (convenience over eigen_decompose).
double lambda_min(const SymMat& s);

/// True iff p - q is positive semi-definite up to tolerance:
/// lambda_min(p - q) >= -tol * max(1, ||p - q||_F).
bool dominates(const SymMat& p, const SymMat& q, double tol);

/// Spectral inverse V diag(1/lambda) V^T. Requires every |eigenvalue| to
/// exceed 1e-12 * max(1, ||s||_F); throws SingularMatrix otherwise.
SymMat inverse(const SymMat& s);

double trace(const SymMat& s);
/// Matrix inner product <x, y> = tr(x^T y) = sum_ij x_ij * y_ij.
double frob_inner(const SymMat& x, const SymMat& y);

} // namespace loewner
