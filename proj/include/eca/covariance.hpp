#pragma once

#include "eca/types.hpp"

namespace eca {

// One spiked direction: eigenvalue omega carried by a unit vector that is
// constant (1/sqrt(support)) on a block of `support` consecutive coordinates.
struct SpikeComponent {
    double omega = 0.0;  // eigenvalue of the covariance along this spike
    int support = 0;     // number of nonzero coordinates of the eigenvector
};

// Population covariance of the form
//   Sigma = sum_j (omega_j - baseline) v_j v_j^T + baseline * I_d ,
// where the v_j live on disjoint consecutive blocks.  Its eigenvalues are
// exactly {omega_1, ..., omega_m} followed by `baseline` with multiplicity
// d - m, and v_j is the j-th leading eigenvector.
struct CovarianceSpec {
    int d = 0;
    std::vector<SpikeComponent> components;  // omegas strictly decreasing
    double baseline = 0.0;                   // smaller than every omega, > 0
};

// Throws std::invalid_argument describing the first violated constraint.
void validate(const CovarianceSpec& spec);

SymMatrix build_spike_covariance(const CovarianceSpec& spec);

// j is 0-based.  The eigenvector is exactly sparse: 1/sqrt(s_j) on its block.
Vector spike_eigenvector(const CovarianceSpec& spec, int j);
std::vector<Index> spike_support(const CovarianceSpec& spec, int j);

// All d eigenvalues in descending order (spikes then the baseline block).
Vector spike_eigenvalues(const CovarianceSpec& spec);

}  // namespace eca
