#include "eca/ftpm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "eca/errors.hpp"
#include "eca/scatter.hpp"
#include "eca/spectral.hpp"

namespace eca {

namespace {

// Indices of the k largest-magnitude entries; ties keep the smaller index.
std::vector<Index> topk_indices(const Vector& v, int k) {
    std::vector<Index> idx(v.size());
    std::iota(idx.begin(), idx.end(), Index{0});
    std::partial_sort(idx.begin(), idx.begin() + k, idx.end(), [&](Index a, Index b) {
        const double fa = std::abs(v[a]);
        const double fb = std::abs(v[b]);
        if (fa != fb) return fa > fb;
        return a < b;
    });
    idx.resize(k);
    return idx;
}

void apply_sign_convention(Vector& v) {
    for (Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-12) {
            if (v[i] < 0.0) v = -v;
            return;
        }
    }
}

void check_unit(const Vector& v, const char* who) {
    if (std::abs(v.norm() - 1.0) > 1e-8) {
        throw std::invalid_argument(std::string(who) + ": vector must have unit norm");
    }
}

}  // namespace

Vector trc(const Vector& v, const std::vector<Index>& keep) {
    Vector out = Vector::Zero(v.size());
    for (Index i : keep) {
        if (i < 0 || i >= v.size()) {
            throw std::invalid_argument("trc: index " + std::to_string(i) + " out of range");
        }
        out[i] = v[i];
    }
    return out;
}

Vector init_from_fantope(const SymMatrix& x1, double delta) {
    if (!(delta >= 0.0)) {
        throw std::invalid_argument("init_from_fantope: delta must be >= 0");
    }
    const Vector u = eigh_sorted(x1).vectors.col(0);
    std::vector<Index> keep;
    for (Index i = 0; i < u.size(); ++i) {
        if (std::abs(u[i]) >= delta) keep.push_back(i);
    }
    if (keep.empty()) {
        throw NumericError("init_from_fantope: no coordinate of the leading eigenvector "
                           "reaches delta = " + std::to_string(delta) + "; lower delta");
    }
    Vector v = trc(u, keep);
    const double norm = v.norm();
    if (!(norm > 0.0)) {
        throw NumericError("init_from_fantope: truncated initializer has zero norm");
    }
    return v / norm;
}

Vector init_from_fantope_topk(const SymMatrix& x1, int k) {
    if (k < 1 || k > x1.dim()) {
        throw std::invalid_argument("init_from_fantope_topk: k out of range");
    }
    const Vector u = eigh_sorted(x1).vectors.col(0);
    Vector v = trc(u, topk_indices(u, k));
    const double norm = v.norm();
    if (!(norm > 0.0)) {
        throw NumericError("init_from_fantope_topk: truncated initializer has zero norm");
    }
    return v / norm;
}

SparseEigenResult truncated_power(const SymMatrix& m, const Vector& v0, const FtpmParams& params,
                                  std::vector<double>* objective_trace) {
    const Index d = m.dim();
    if (v0.size() != d) {
        throw std::invalid_argument("truncated_power: initializer has the wrong length");
    }
    check_unit(v0, "truncated_power");
    if (params.k < 1 || params.k > d) {
        throw std::invalid_argument("truncated_power: cardinality " + std::to_string(params.k) +
                                    " out of range for dimension " + std::to_string(d));
    }
    if (!(params.epsilon > 0.0) || params.max_iter < 1) {
        throw std::invalid_argument("truncated_power: invalid stopping parameters");
    }

    if (objective_trace) objective_trace->clear();
    Vector v = v0;
    Vector x(d);
    SparseEigenResult out;
    for (int t = 1; t <= params.max_iter; ++t) {
        x.noalias() = m.values() * v;
        if (!x.allFinite()) {
            throw NumericError("truncated_power: iterate became non-finite at iteration " +
                               std::to_string(t));
        }
        long nnz = 0;
        for (Index i = 0; i < d; ++i) nnz += (x[i] != 0.0);
        if (nnz == 0) {
            throw NumericError("truncated_power: power iterate vanished at iteration " +
                               std::to_string(t) + "; the matrix annihilates the initializer");
        }
        Vector next;
        if (nnz <= params.k) {
            next = x / x.norm();
        } else {
            next = trc(x, topk_indices(x, params.k));
            next /= next.norm();
        }
        const double step = (next - v).norm();
        v = std::move(next);
        out.iterations = t;
        if (objective_trace) objective_trace->push_back(v.dot(m.values() * v));
        if (step <= params.epsilon) {
            out.converged = true;
            break;
        }
    }

    out.objective = v.dot(m.values() * v);
    apply_sign_convention(v);
    for (Index i = 0; i < d; ++i) {
        if (v[i] != 0.0) out.support.push_back(i);
    }
    out.vector = std::move(v);
    return out;
}

SymMatrix deflate(const SymMatrix& m, const Vector& v) {
    if (v.size() != m.dim()) {
        throw std::invalid_argument("deflate: vector length does not match the matrix");
    }
    check_unit(v, "deflate");
    const Vector w = m.values() * v;
    const double vmv = v.dot(w);
    Matrix out = m.values();
    out.noalias() -= v * w.transpose();
    out.noalias() -= w * v.transpose();
    out.noalias() += (vmv)*v * v.transpose();
    return SymMatrix(symmetrized(out), ScatterKind::Generic);
}

FtpmOutcome ftpm_leading(const SymMatrix& m, const FtpmParams& params) {
    FantopeParams fp = params.fantope;
    fp.m = 1;
    const FantopeSolution relax = solve_fantope_pca(m, fp);
    const SymMatrix x1(relax.x_m);

    Vector v0;
    if (params.init_sparsity.has_value()) {
        v0 = init_from_fantope_topk(x1, *params.init_sparsity);
    } else {
        v0 = init_from_fantope(x1, params.delta);
    }

    FtpmOutcome out;
    out.fantope_objective = relax.objective;
    out.fantope_iterations = relax.iterations;
    out.fantope_converged = relax.converged;
    out.init_support = 0;
    for (Index i = 0; i < v0.size(); ++i) out.init_support += (v0[i] != 0.0);
    out.estimate = truncated_power(m, v0, params);
    return out;
}

std::vector<FtpmOutcome> ftpm_top_m(const SymMatrix& m, int components,
                                    const std::vector<FtpmParams>& per_component) {
    if (components < 1 || components > m.dim()) {
        throw std::invalid_argument("ftpm_top_m: component count out of range");
    }
    if (per_component.size() != static_cast<std::size_t>(components)) {
        throw std::invalid_argument("ftpm_top_m: need one parameter set per component");
    }
    std::vector<FtpmOutcome> out;
    out.reserve(components);
    SymMatrix work = m;
    for (int j = 0; j < components; ++j) {
        out.push_back(ftpm_leading(work, per_component[j]));
        if (j + 1 < components) {
            work = deflate(work, out.back().estimate.vector);
        }
    }
    return out;
}

std::vector<FtpmOutcome> ftpm_top_m(const SymMatrix& m, int components, const FtpmParams& params) {
    return ftpm_top_m(m, components,
                      std::vector<FtpmParams>(static_cast<std::size_t>(std::max(components, 1)),
                                              params));
}

SelectKResult select_k(const Matrix& x_train, const Matrix& x_val, const std::vector<int>& k_grid,
                       const FtpmParams& params) {
    if (x_train.cols() != x_val.cols()) {
        throw std::invalid_argument("select_k: train and validation data have different widths");
    }
    if (k_grid.empty()) {
        throw std::invalid_argument("select_k: empty cardinality grid");
    }
    const SymMatrix k_train = multivariate_kendall(x_train);
    const SymMatrix k_val = multivariate_kendall(x_val);

    std::vector<int> grid = k_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (int k : grid) {
        if (k < 1 || k > x_train.cols()) {
            throw std::invalid_argument("select_k: cardinality " + std::to_string(k) +
                                        " out of range");
        }
    }

    // The rank-1 relaxation stage does not involve k: solve it once and
    // re-truncate its leading eigenvector per grid point.
    FantopeParams fp = params.fantope;
    fp.m = 1;
    const FantopeSolution relax = solve_fantope_pca(k_train, fp);
    const SymMatrix x1(relax.x_m);

    SelectKResult out;
    bool first = true;
    for (int k : grid) {
        FtpmParams p = params;
        p.k = k;
        const Vector v0 = init_from_fantope_topk(x1, k);
        const SparseEigenResult fit = truncated_power(k_train, v0, p);
        const double score = fit.vector.dot(k_val.values() * fit.vector);
        out.table.emplace_back(k, score);
        if (first || score > out.score) {
            out.k = k;
            out.score = score;
            first = false;
        }
    }
    return out;
}

}  // namespace eca
