#pragma once

#include "eca/types.hpp"

namespace eca {

// Symmetric eigendecomposition, eigenvalues descending, eigenvector signs
// fixed (first entry above 1e-12 in magnitude is positive).  Throws
// NumericError if the underlying solver fails.
EigenResult eigh_sorted(const SymMatrix& m);

// The m leading eigenvectors (columns), same ordering and sign convention.
Matrix eca_leading(const SymMatrix& m, int m_components);

// sin of the principal angle between two unit vectors:
// sqrt(1 - (u.v)^2), clamped at 0.  Both arguments must be unit within 1e-8.
double sin_angle(const Vector& u, const Vector& v);

// Frobenius distance between two projectors of equal dimension.
double subspace_frobenius_dist(const SubspaceProjector& p1, const SubspaceProjector& p2);

// Spectral norm (largest |eigenvalue|) of a symmetric matrix.
double sym_spectral_norm(const SymMatrix& m);

// Largest absolute entry.
double max_abs_norm(const Matrix& m);

// Perturbation bound for the m leading eigenvectors of `reference` estimated
// by those of `estimate`:
//   m = 1:   2 ||E - R||_2 / (lambda_1 - lambda_2)
//   m >= 2:  2 sqrt(2m) ||E - R||_2 / (lambda_m - lambda_{m+1})
// with the eigenvalues taken from `reference`.  Throws on a zero gap.
double davis_kahan_rhs(const SymMatrix& estimate, const SymMatrix& reference, int m);

}  // namespace eca
