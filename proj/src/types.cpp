#include "eca/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eca {

const char* to_string(ScatterKind kind) {
    switch (kind) {
        case ScatterKind::MultivariateKendall: return "MultivariateKendall";
        case ScatterKind::MarginalKendallCorr: return "MarginalKendallCorr";
        case ScatterKind::TcaCovariance:       return "TcaCovariance";
        case ScatterKind::PearsonCov:          return "PearsonCov";
        case ScatterKind::PopulationK:         return "PopulationK";
        case ScatterKind::Generic:             return "Generic";
    }
    return "Generic";
}

SymMatrix::SymMatrix(Matrix values, ScatterKind kind)
    : values_(std::move(values)), kind_(kind) {
    if (values_.rows() != values_.cols()) {
        throw std::invalid_argument("SymMatrix: matrix must be square, got " +
                                    std::to_string(values_.rows()) + "x" +
                                    std::to_string(values_.cols()));
    }
    if (!values_.allFinite()) {
        throw std::invalid_argument("SymMatrix: matrix has non-finite entries");
    }
    for (Index j = 0; j < values_.cols(); ++j) {
        for (Index i = j + 1; i < values_.rows(); ++i) {
            if (values_(i, j) != values_(j, i)) {
                throw std::invalid_argument(
                    "SymMatrix: not exactly symmetric at (" + std::to_string(i) +
                    "," + std::to_string(j) + "); use symmetrized() first");
            }
        }
    }
}

Matrix symmetrized(const Matrix& a) {
    return 0.5 * (a + a.transpose());
}

SubspaceProjector SubspaceProjector::from_basis(const Matrix& v) {
    if (v.rows() < v.cols() || v.cols() < 1) {
        throw std::invalid_argument("SubspaceProjector: basis must be d x m with 1 <= m <= d");
    }
    const Matrix gram = v.transpose() * v;
    const double defect = (gram - Matrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff();
    if (!(defect <= 1e-8)) {
        throw std::invalid_argument(
            "SubspaceProjector: basis columns are not orthonormal (defect " +
            std::to_string(defect) + ")");
    }
    return SubspaceProjector(symmetrized(v * v.transpose()), static_cast<int>(v.cols()));
}

SubspaceProjector SubspaceProjector::from_matrix(Matrix p, int rank) {
    if (p.rows() != p.cols()) {
        throw std::invalid_argument("SubspaceProjector: matrix must be square");
    }
    if (rank < 1 || rank > p.rows()) {
        throw std::invalid_argument("SubspaceProjector: rank out of range");
    }
    const double asym = (p - p.transpose()).cwiseAbs().maxCoeff();
    const double idem = (p * p - p).cwiseAbs().maxCoeff();
    const double tr = std::abs(p.trace() - static_cast<double>(rank));
    if (!(asym <= 1e-8 && idem <= 1e-8 && tr <= 1e-8)) {
        throw std::invalid_argument(
            "SubspaceProjector: matrix is not a rank-" + std::to_string(rank) +
            " orthogonal projector (asym " + std::to_string(asym) + ", idem " +
            std::to_string(idem) + ", trace defect " + std::to_string(tr) + ")");
    }
    return SubspaceProjector(symmetrized(p), rank);
}

}  // namespace eca
