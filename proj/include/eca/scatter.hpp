#pragma once

#include <cstdint>

#include "eca/types.hpp"

namespace eca {

// What to do with an observation pair whose difference is exactly zero (the
// pairwise kernel is undefined there).
enum class DegeneratePairPolicy {
    Error,  // throw DegenerateDataError naming the offending rows
    Skip,   // drop the pair and renormalize by the surviving count
};

// Pairwise sign-kernel scatter estimator
//   K_hat = mean over pairs i < i' of  u u^T,  u = (x_i - x_i') / ||x_i - x_i'||.
// PSD with trace 1 by construction (trace exactly 1 up to roundoff whenever
// no pair is skipped).  Rows of x are observations.
//
// `threads` may exceed 1; pairs are accumulated into a fixed set of stripe
// buffers reduced in a fixed order, so the result is bitwise identical for
// every thread count.
SymMatrix multivariate_kendall(const Matrix& x,
                               DegeneratePairPolicy policy = DegeneratePairPolicy::Error,
                               int threads = 1);

// Matrix of pairwise-sign concordance correlations: entrywise
// sin(pi/2 * tau_jk) with tau_jk the average product of coordinate sign
// differences over observation pairs.  Diagonal equals 1 when no column has
// tied values.
SymMatrix marginal_kendall_corr(const Matrix& x);

// The concordance correlation matrix rescaled by sample standard deviations:
// S_jk = sin(pi/2 * tau_jk) * sd_j * sd_k.  Throws DegenerateDataError on a
// zero-variance column.
SymMatrix tca_covariance(const Matrix& x);

// Ordinary sample covariance (divisor n - 1).
SymMatrix pearson_cov(const Matrix& x);

struct PopulationKendallEigs {
    Vector values;       // descending, sums to 1
    Vector std_errors;   // Monte-Carlo standard error of each entry
};

// Monte-Carlo evaluation of the population sign-kernel scatter spectrum from
// the covariance spectrum: entry j estimates
//   E[ lambda_j Y_j^2 / sum_i lambda_i Y_i^2 ],  Y ~ N(0, I).
// Indices with exactly equal lambda have exchangeable ratios, so the ratio
// is averaged within each tie group per draw (a pure variance reduction:
// equal-eigenvalue blocks come out exact).  The output is renormalized to
// sum to 1.  `sigma_eigs` must be nonnegative, nonzero, sorted descending.
PopulationKendallEigs population_kendall_eigs_mc(const Vector& sigma_eigs,
                                                 long mc_samples,
                                                 std::uint64_t seed);

}  // namespace eca
