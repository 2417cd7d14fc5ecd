#include "eca/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "eca/errors.hpp"

namespace eca {

EigenResult eigh_sorted(const SymMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.values());
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigh_sorted: eigensolver failed to converge on a " +
                           std::to_string(m.dim()) + "x" + std::to_string(m.dim()) + " matrix");
    }
    const Index d = m.dim();
    EigenResult out;
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    // Sign convention: first coordinate with magnitude above 1e-12 is positive.
    for (Index j = 0; j < d; ++j) {
        for (Index i = 0; i < d; ++i) {
            const double v = out.vectors(i, j);
            if (std::abs(v) > 1e-12) {
                if (v < 0.0) out.vectors.col(j) = -out.vectors.col(j);
                break;
            }
        }
    }
    return out;
}

Matrix eca_leading(const SymMatrix& m, int m_components) {
    if (m_components < 1 || m_components > m.dim()) {
        throw std::invalid_argument("eca_leading: component count " +
                                    std::to_string(m_components) + " out of range for dim " +
                                    std::to_string(m.dim()));
    }
    return eigh_sorted(m).vectors.leftCols(m_components);
}

double sin_angle(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("sin_angle: vectors have different lengths");
    }
    if (std::abs(u.norm() - 1.0) > 1e-8 || std::abs(v.norm() - 1.0) > 1e-8) {
        throw std::invalid_argument("sin_angle: both vectors must have unit norm");
    }
    const double c = u.dot(v);
    return std::sqrt(std::max(0.0, 1.0 - c * c));
}

double subspace_frobenius_dist(const SubspaceProjector& p1, const SubspaceProjector& p2) {
    if (p1.matrix().rows() != p2.matrix().rows()) {
        throw std::invalid_argument("subspace_frobenius_dist: dimension mismatch");
    }
    return (p1.matrix() - p2.matrix()).norm();
}

double sym_spectral_norm(const SymMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.values(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("sym_spectral_norm: eigensolver failed");
    }
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double max_abs_norm(const Matrix& m) {
    if (m.size() == 0) throw std::invalid_argument("max_abs_norm: empty matrix");
    return m.cwiseAbs().maxCoeff();
}

double davis_kahan_rhs(const SymMatrix& estimate, const SymMatrix& reference, int m) {
    const Index d = reference.dim();
    if (estimate.dim() != d) {
        throw std::invalid_argument("davis_kahan_rhs: dimension mismatch");
    }
    if (m < 1 || m >= d) {
        throw std::invalid_argument("davis_kahan_rhs: need 1 <= m < d");
    }
    const EigenResult ref = eigh_sorted(reference);
    const double gap = ref.values[m - 1] - ref.values[m];
    if (!(gap > 0.0)) {
        throw std::invalid_argument("davis_kahan_rhs: zero eigengap between positions " +
                                    std::to_string(m) + " and " + std::to_string(m + 1));
    }
    const double err = sym_spectral_norm(
        SymMatrix(symmetrized(estimate.values() - reference.values())));
    const double factor = (m == 1) ? 2.0 : 2.0 * std::sqrt(2.0 * m);
    return factor * err / gap;
}

}  // namespace eca
