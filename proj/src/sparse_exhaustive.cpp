#include "eca/sparse_exhaustive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "eca/errors.hpp"

namespace eca {

namespace {

void check_args(const SymMatrix& m, int s, double budget, const char* who) {
    if (s < 1 || s > m.dim()) {
        throw std::invalid_argument(std::string(who) + ": sparsity " + std::to_string(s) +
                                    " out of range for dimension " + std::to_string(m.dim()));
    }
    const double count = subset_count(static_cast<int>(m.dim()), s);
    if (count > budget) {
        throw CombinatorialBudgetError(
            std::string(who) + ": C(" + std::to_string(m.dim()) + "," + std::to_string(s) +
            ") = " + std::to_string(count) + " supports exceed the budget of " +
            std::to_string(budget));
    }
}

// Lexicographic successor of a size-s combination over {0, ..., d-1};
// returns false after the last one.
bool next_combination(std::vector<Index>& c, Index d) {
    const int s = static_cast<int>(c.size());
    for (int i = s - 1; i >= 0; --i) {
        if (c[i] < d - static_cast<Index>(s - i)) {
            ++c[i];
            for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void fill_submatrix(const Matrix& m, const std::vector<Index>& support, Matrix& sub) {
    const int s = static_cast<int>(support.size());
    for (int b = 0; b < s; ++b) {
        for (int a = 0; a < s; ++a) {
            sub(a, b) = m(support[a], support[b]);
        }
    }
}

}  // namespace

double subset_count(int d, int s) {
    if (s < 0 || s > d) return 0.0;
    s = std::min(s, d - s);
    double r = 1.0;
    for (int i = 1; i <= s; ++i) {
        r = r * static_cast<double>(d - s + i) / static_cast<double>(i);
    }
    return std::round(r);
}

SparseEigenResult sparse_leading_eigenvector(const SymMatrix& m, int s, double budget) {
    check_args(m, s, budget, "sparse_leading_eigenvector");
    const Index d = m.dim();

    std::vector<Index> support(s);
    for (int i = 0; i < s; ++i) support[i] = i;

    Matrix sub(s, s);
    Eigen::SelfAdjointEigenSolver<Matrix> values_solver;
    double best = -1.0;
    std::vector<Index> best_support;
    do {
        fill_submatrix(m.values(), support, sub);
        values_solver.compute(sub, Eigen::EigenvaluesOnly);
        if (values_solver.info() != Eigen::Success) {
            throw NumericError("sparse_leading_eigenvector: eigensolver failed on a submatrix");
        }
        const auto& ev = values_solver.eigenvalues();
        const double radius = std::max(std::abs(ev[0]), std::abs(ev[s - 1]));
        // Strict improvement only: equal objectives keep the earlier
        // (lexicographically smaller) support.
        if (radius > best) {
            best = radius;
            best_support = support;
        }
    } while (next_combination(support, d));

    // Re-solve the winning support with eigenvectors.
    fill_submatrix(m.values(), best_support, sub);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sub);
    if (solver.info() != Eigen::Success) {
        throw NumericError("sparse_leading_eigenvector: eigensolver failed on the winner");
    }
    const auto& ev = solver.eigenvalues();
    // Ascending order: the extreme pair is at one of the two ends; prefer
    // the positive end on an exact tie.
    const int pick = (std::abs(ev[s - 1]) >= std::abs(ev[0])) ? s - 1 : 0;

    SparseEigenResult out;
    out.objective = std::abs(ev[pick]);
    out.iterations = 0;
    out.converged = true;
    out.vector = Vector::Zero(d);
    for (int a = 0; a < s; ++a) {
        out.vector[best_support[a]] = solver.eigenvectors()(a, pick);
    }
    for (Index i = 0; i < d; ++i) {
        if (std::abs(out.vector[i]) > 1e-12) {
            if (out.vector[i] < 0.0) out.vector = -out.vector;
            break;
        }
    }
    for (Index i = 0; i < d; ++i) {
        if (out.vector[i] != 0.0) out.support.push_back(i);
    }
    return out;
}

double restricted_spectral_norm(const SymMatrix& m, int s, double budget) {
    check_args(m, s, budget, "restricted_spectral_norm");
    const Index d = m.dim();

    std::vector<Index> support(s);
    for (int i = 0; i < s; ++i) support[i] = i;

    Matrix sub(s, s);
    Eigen::SelfAdjointEigenSolver<Matrix> solver;
    double best = 0.0;
    do {
        fill_submatrix(m.values(), support, sub);
        solver.compute(sub, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw NumericError("restricted_spectral_norm: eigensolver failed on a submatrix");
        }
        const auto& ev = solver.eigenvalues();
        best = std::max(best, std::max(std::abs(ev[0]), std::abs(ev[s - 1])));
    } while (next_combination(support, d));
    return best;
}

}  // namespace eca
