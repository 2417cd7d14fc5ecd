#pragma once

#include "eca/types.hpp"

namespace eca {

// Projection onto the Fantope {0 <= M <= I, Tr(M) = m} in Frobenius norm:
// eigenvalues are shifted by a scalar theta and clipped to [0, 1], where
// theta solves sum_i clip(lambda_i - theta, 0, 1) = m by monotone bisection
// (residual 1e-12, at most 200 steps; throws NumericError on failure).
SymMatrix fantope_project(const SymMatrix& a, int m);

struct FantopeParams {
    double lambda = 0.0;      // entrywise l1 penalty weight, >= 0
    int m = 1;                // target subspace dimension
    double rho = 1.0;         // splitting penalty, > 0
    double tol_primal = 1e-6; // scaled by d in the stopping test
    double tol_dual = 1e-6;   // scaled by d in the stopping test
    int max_iter = 2000;
};

struct FantopeSolution {
    Matrix x_m;              // final Fantope-feasible iterate
    double objective = 0.0;  // <input, x_m> - lambda * sum_jk |x_m(j,k)|
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    bool converged = false;
    Matrix z;                // final splitting state, reusable as a warm start
    Matrix u;
};

// Maximizes <input, M> - lambda * sum|M_jk| over the Fantope via two-block
// operator splitting: project the first block onto the Fantope, soft-
// threshold the second block by lambda/rho after adding input/rho, then a
// scaled dual update.  `warm_z` / `warm_u` (both d x d, exactly symmetric)
// optionally resume from a previous solution's splitting state; they change
// only the starting point, never the stopping rule.
FantopeSolution solve_fantope_pca(const SymMatrix& input, const FantopeParams& params,
                                  const Matrix* warm_z = nullptr,
                                  const Matrix* warm_u = nullptr);

struct RoundedProjector {
    SubspaceProjector projector;
    // Set when the m-th and (m+1)-th eigenvalues of the relaxation solution
    // coincide (within 1e-12), i.e. the rounded subspace is not unique.
    bool ambiguous = false;
};

// Rounds a relaxation solution to the projector onto its m leading
// eigenvectors.
RoundedProjector round_to_projector(const SymMatrix& x, int m);

// Penalty heuristic max|input| * sqrt(log(d) / n) used by the harness.
double default_lambda(const SymMatrix& input, long n);

}  // namespace eca
