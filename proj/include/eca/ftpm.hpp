#pragma once

#include <optional>
#include <vector>

#include "eca/fantope.hpp"
#include "eca/types.hpp"

namespace eca {

struct FtpmParams {
    int k = 0;                         // cardinality kept per iteration, >= 1
    double epsilon = 1e-6;             // stop when ||v_t - v_{t-1}||_2 <= epsilon
    int max_iter = 1000;
    double delta = 0.0;                // init keeps |u_1| >= delta (when no target below)
    std::optional<int> init_sparsity;  // init keeps exactly this many largest |u_1| entries
    FantopeParams fantope;             // relaxation stage settings (m is forced to 1)
};

// v with every coordinate outside `keep` zeroed.
Vector trc(const Vector& v, const std::vector<Index>& keep);

// Initializer from a relaxation solution X1: truncate its leading
// eigenvector to the coordinates with |entry| >= delta, then renormalize.
// Throws NumericError when no coordinate qualifies (guidance: lower delta).
Vector init_from_fantope(const SymMatrix& x1, double delta);

// Same, but keeping exactly the k largest-|entry| coordinates (ties keep the
// smaller index), the harness convention for a target output sparsity.
Vector init_from_fantope_topk(const SymMatrix& x1, int k);

// Truncated power iteration: repeat v <- normalize(truncate(M v, k)) until
// successive iterates move at most epsilon, where truncate keeps the k
// largest-magnitude coordinates (no-op when M v is already k-sparse; ties
// keep the smaller index).  On PSD input the quadratic form v^T M v is
// nondecreasing along accepted iterates; pass `objective_trace` to record it
// per iteration.  The returned vector carries the sign convention of
// eigh_sorted and objective = v^T M v.
SparseEigenResult truncated_power(const SymMatrix& m, const Vector& v0, const FtpmParams& params,
                                  std::vector<double>* objective_trace = nullptr);

// (I - v v^T) M (I - v v^T), exactly symmetric; annihilates v.
SymMatrix deflate(const SymMatrix& m, const Vector& v);

struct FtpmOutcome {
    SparseEigenResult estimate;
    double fantope_objective = 0.0;
    int fantope_iterations = 0;
    bool fantope_converged = false;
    int init_support = 0;  // cardinality of the initializer
};

// Full single-component pipeline: rank-1 Fantope relaxation of `m`, sparse
// initializer from its leading eigenvector, then truncated power iteration
// on `m` itself.
FtpmOutcome ftpm_leading(const SymMatrix& m, const FtpmParams& params);

// Leading components one after another, each time deflating the previously
// found direction out of the working matrix.  Every step reuses `params`
// unless `per_component` supplies one parameter set per component.
std::vector<FtpmOutcome> ftpm_top_m(const SymMatrix& m, int components, const FtpmParams& params);
std::vector<FtpmOutcome> ftpm_top_m(const SymMatrix& m, int components,
                                    const std::vector<FtpmParams>& per_component);

struct SelectKResult {
    int k = 0;           // chosen cardinality (smallest maximizer)
    double score = 0.0;  // u^T K_val u at the chosen k
    std::vector<std::pair<int, double>> table;  // (k, score), ascending in k
};

// Validation selection of the cardinality: fit the leading component on the
// training rows at every k in the grid (sharing the k-independent relaxation
// stage) and score u_k^T K_val u_k on the held-out rows.  Ties pick the
// smallest k.
SelectKResult select_k(const Matrix& x_train, const Matrix& x_val, const std::vector<int>& k_grid,
                       const FtpmParams& params);

}  // namespace eca
