#pragma once

#include <Eigen/Dense>
#include <vector>

namespace eca {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// What a symmetric scatter-style matrix is, for routines that care about the
// provenance of their input (e.g. whether a PSD certificate is available).
enum class ScatterKind {
    MultivariateKendall,  // pairwise sign-kernel scatter; PSD, trace 1
    MarginalKendallCorr,  // sin-transformed pairwise-sign correlation
    TcaCovariance,        // marginal transformed correlation scaled by sd's
    PearsonCov,           // ordinary sample covariance
    PopulationK,          // population scatter assembled from known spectrum
    Generic,
};

const char* to_string(ScatterKind kind);

// Square symmetric matrix with a provenance tag.  Construction enforces
// exact symmetry (values == values^T entrywise) and finiteness; use
// symmetrized() to repair near-symmetric arithmetic results first.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(Matrix values, ScatterKind kind = ScatterKind::Generic);

    const Matrix& values() const { return values_; }
    ScatterKind kind() const { return kind_; }
    Index dim() const { return values_.rows(); }

private:
    Matrix values_;
    ScatterKind kind_ = ScatterKind::Generic;
};

// 0.5*(A + A^T), which is exactly symmetric entry-by-entry in floating
// point because addition commutes.
Matrix symmetrized(const Matrix& a);

// Eigendecomposition of a symmetric matrix with eigenvalues sorted in
// descending order.  Every eigenvector's sign is fixed so that its first
// entry exceeding 1e-12 in absolute value is positive.
struct EigenResult {
    Vector values;   // descending
    Matrix vectors;  // column j pairs with values[j]
};

// Unit-or-shorter vector supported on few coordinates, produced by the
// sparse eigenvector routines.
struct SparseEigenResult {
    Vector vector;               // length d, zero off the support
    std::vector<Index> support;  // sorted ascending, the nonzero coordinates
    double objective = 0.0;      // v^T M v at the returned vector
    int iterations = 0;          // 0 for exact (non-iterative) solvers
    bool converged = false;
};

// Rank-m orthogonal projector.  Factories validate the defining identities.
class SubspaceProjector {
public:
    // V must be d x m with (numerically) orthonormal columns.
    static SubspaceProjector from_basis(const Matrix& v);
    // P must satisfy P = P^T, P^2 = P, Tr(P) = rank, within 1e-8.
    static SubspaceProjector from_matrix(Matrix p, int rank);

    const Matrix& matrix() const { return matrix_; }
    int rank() const { return rank_; }

private:
    SubspaceProjector(Matrix p, int rank) : matrix_(std::move(p)), rank_(rank) {}
    Matrix matrix_;
    int rank_ = 0;
};

}  // namespace eca
