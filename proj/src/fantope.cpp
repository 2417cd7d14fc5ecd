#include "eca/fantope.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "eca/errors.hpp"
#include "eca/spectral.hpp"

namespace eca {

namespace {

double clip01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// Fantope projection of an exactly-symmetric matrix, skipping the SymMatrix
// wrapper so the splitting loop avoids per-iteration validation.
Matrix fantope_project_impl(const Matrix& a, int m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw NumericError("fantope_project: eigensolver failed");
    }
    const Vector& lambda = solver.eigenvalues();
    const Index d = lambda.size();

    auto clipped_sum = [&](double theta) {
        double s = 0.0;
        for (Index i = 0; i < d; ++i) s += clip01(lambda[i] - theta);
        return s;
    };

    // h(theta) = sum clip(lambda - theta, 0, 1) decreases from d to 0;
    // bracket so h(lo) >= m >= h(hi) and bisect.
    double lo = lambda.minCoeff() - 1.0;
    double hi = lambda.maxCoeff();
    double theta = lo;
    bool solved = false;
    for (int it = 0; it < 200; ++it) {
        theta = 0.5 * (lo + hi);
        const double h = clipped_sum(theta);
        if (std::abs(h - static_cast<double>(m)) <= 1e-12) {
            solved = true;
            break;
        }
        if (h > static_cast<double>(m)) {
            lo = theta;
        } else {
            hi = theta;
        }
    }
    if (!solved) {
        throw NumericError("fantope_project: bisection for the eigenvalue shift did not reach "
                           "residual 1e-12 within 200 steps");
    }

    Vector w(d);
    for (Index i = 0; i < d; ++i) w[i] = clip01(lambda[i] - theta);
    return symmetrized(solver.eigenvectors() * w.asDiagonal() *
                       solver.eigenvectors().transpose());
}

double soft(double v, double t) {
    if (v > t) return v - t;
    if (v < -t) return v + t;
    return 0.0;
}

}  // namespace

SymMatrix fantope_project(const SymMatrix& a, int m) {
    if (m < 1 || m > a.dim()) {
        throw std::invalid_argument("fantope_project: target dimension " + std::to_string(m) +
                                    " out of range for a " + std::to_string(a.dim()) +
                                    "-dimensional matrix");
    }
    return SymMatrix(fantope_project_impl(a.values(), m));
}

FantopeSolution solve_fantope_pca(const SymMatrix& input, const FantopeParams& params,
                                  const Matrix* warm_z, const Matrix* warm_u) {
    const Index d = input.dim();
    if (params.m < 1 || params.m > d) {
        throw std::invalid_argument("solve_fantope_pca: subspace dimension out of range");
    }
    if (!(params.lambda >= 0.0)) {
        throw std::invalid_argument("solve_fantope_pca: penalty must be >= 0");
    }
    if (!(params.rho > 0.0)) {
        throw std::invalid_argument("solve_fantope_pca: splitting penalty must be > 0");
    }
    if (!(params.tol_primal > 0.0) || !(params.tol_dual > 0.0) || params.max_iter < 1) {
        throw std::invalid_argument("solve_fantope_pca: invalid stopping parameters");
    }
    auto check_warm = [&](const Matrix* w, const char* name) {
        if (w == nullptr) return;
        if (w->rows() != d || w->cols() != d) {
            throw std::invalid_argument(std::string("solve_fantope_pca: warm-start ") + name +
                                        " has the wrong shape");
        }
        if (!w->allFinite()) {
            throw std::invalid_argument(std::string("solve_fantope_pca: warm-start ") + name +
                                        " has non-finite entries");
        }
    };
    check_warm(warm_z, "Z");
    check_warm(warm_u, "U");

    const double thresh = params.lambda / params.rho;
    const Matrix input_over_rho = input.values() / params.rho;
    Matrix z = warm_z ? symmetrized(*warm_z) : Matrix::Zero(d, d);
    Matrix u = warm_u ? symmetrized(*warm_u) : Matrix::Zero(d, d);
    Matrix m_it(d, d), z_prev(d, d);

    FantopeSolution out;
    const double eps_primal = params.tol_primal * static_cast<double>(d);
    const double eps_dual = params.tol_dual * static_cast<double>(d);
    for (int it = 1; it <= params.max_iter; ++it) {
        m_it = fantope_project_impl(z - u, params.m);
        z_prev.swap(z);
        z = (m_it + u + input_over_rho).unaryExpr([&](double v) { return soft(v, thresh); });
        u += m_it - z;
        out.iterations = it;
        out.primal_residual = (m_it - z).norm();
        out.dual_residual = params.rho * (z - z_prev).norm();
        if (out.primal_residual <= eps_primal && out.dual_residual <= eps_dual) {
            out.converged = true;
            break;
        }
        if (!m_it.allFinite() || !z.allFinite()) {
            throw NumericError("solve_fantope_pca: iterates became non-finite");
        }
    }
    out.objective = (input.values().cwiseProduct(m_it)).sum() -
                    params.lambda * m_it.cwiseAbs().sum();
    out.x_m = std::move(m_it);
    out.z = std::move(z);
    out.u = std::move(u);
    return out;
}

RoundedProjector round_to_projector(const SymMatrix& x, int m) {
    if (m < 1 || m > x.dim()) {
        throw std::invalid_argument("round_to_projector: rank out of range");
    }
    const EigenResult eig = eigh_sorted(x);
    bool ambiguous = false;
    if (m < x.dim()) {
        const double scale = std::max(1.0, std::abs(eig.values[0]));
        ambiguous = (eig.values[m - 1] - eig.values[m]) <= 1e-12 * scale;
    }
    return RoundedProjector{SubspaceProjector::from_basis(eig.vectors.leftCols(m)), ambiguous};
}

double default_lambda(const SymMatrix& input, long n) {
    if (n < 2) throw std::invalid_argument("default_lambda: need n >= 2");
    const double d = static_cast<double>(input.dim());
    return max_abs_norm(input.values()) * std::sqrt(std::log(d) / static_cast<double>(n));
}

}  // namespace eca
