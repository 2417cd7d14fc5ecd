#pragma once

#include "eca/types.hpp"

namespace eca {

// Exact number of size-s subsets of d coordinates (as a double; exact while
// it fits the budget scale).
double subset_count(int d, int s);

// Exact solution of  max |v^T M v|  over unit vectors with at most s nonzero
// coordinates, by enumerating every size-s principal submatrix in
// lexicographic order and taking its extreme eigenpair.  Ties prefer the
// lexicographically smallest support.  Throws CombinatorialBudgetError when
// C(d, s) exceeds `budget` (default 2e6).  `objective` is the achieved
// |v^T M v|; iterations is 0 and converged is true (the search is exact).
SparseEigenResult sparse_leading_eigenvector(const SymMatrix& m, int s, double budget = 2e6);

// Restricted spectral norm: max over size-s supports J of the spectral norm
// of M_JJ.  Equals the spectral norm when s = d.  Same budget rule.
double restricted_spectral_norm(const SymMatrix& m, int s, double budget = 2e6);

}  // namespace eca
