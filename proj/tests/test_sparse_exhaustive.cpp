#include <vector>

#include "doctest.h"
#include "eca/errors.hpp"
#include "eca/rng.hpp"
#include "eca/sparse_exhaustive.hpp"
#include "eca/spectral.hpp"

using namespace eca;

namespace {

SymMatrix random_sym(int d, std::uint64_t seed) {
    auto rng = make_rng(seed);
    std::normal_distribution<double> normal;
    Matrix g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) g(i, j) = normal(rng);
    }
    return SymMatrix(symmetrized(g));
}

// Independent enumeration: recurse over all s-subsets and track the best
// absolute quadratic-form value via dense eigendecompositions.
void best_subset_rec(const Matrix& m, int s, int from, std::vector<int>& picked,
                     double& best) {
    if (static_cast<int>(picked.size()) == s) {
        Matrix sub(s, s);
        for (int a = 0; a < s; ++a) {
            for (int b = 0; b < s; ++b) sub(a, b) = m(picked[a], picked[b]);
        }
        Eigen::SelfAdjointEigenSolver<Matrix> eig(sub);
        const double radius = std::max(std::abs(eig.eigenvalues().minCoeff()),
                                       std::abs(eig.eigenvalues().maxCoeff()));
        best = std::max(best, radius);
        return;
    }
    for (int i = from; i < m.rows(); ++i) {
        picked.push_back(i);
        best_subset_rec(m, s, i + 1, picked, best);
        picked.pop_back();
    }
}

double brute_force_restricted_norm(const SymMatrix& m, int s) {
    std::vector<int> picked;
    double best = 0.0;
    best_subset_rec(m.values(), s, 0, picked, best);
    return best;
}

}  // namespace

TEST_CASE("subset counts") {
    CHECK(subset_count(5, 2) == doctest::Approx(10.0));
    CHECK(subset_count(16, 8) == doctest::Approx(12870.0));
    CHECK(subset_count(10, 10) == doctest::Approx(1.0));
    CHECK(subset_count(10, 0) == doctest::Approx(1.0));
    CHECK(subset_count(50, 25) > 1e13);
}

TEST_CASE("exhaustive sparse eigenvector on diagonal input") {
    Matrix a = Matrix::Zero(3, 3);
    a(0, 0) = 1;
    a(1, 1) = 2;
    a(2, 2) = 5;
    const SparseEigenResult r = sparse_leading_eigenvector(SymMatrix(a), 1);
    CHECK(r.support == std::vector<Index>{2});
    CHECK(r.vector(2) == doctest::Approx(1.0));
    CHECK(r.objective == doctest::Approx(5.0));
    CHECK(r.converged);
    CHECK(r.iterations == 0);
}

TEST_CASE("a dominant negative eigenvalue wins on absolute value") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = -7;
    a(1, 1) = 3;
    const SparseEigenResult r = sparse_leading_eigenvector(SymMatrix(a), 1);
    CHECK(r.support == std::vector<Index>{0});
    // The objective is the absolute Rayleigh quotient |v'Av|.
    CHECK(r.objective == doctest::Approx(7.0));
    CHECK(r.vector.dot(a * r.vector) == doctest::Approx(-7.0));
    CHECK(restricted_spectral_norm(SymMatrix(a), 1) == doctest::Approx(7.0));
}

TEST_CASE("coupled block beats larger single diagonal") {
    // On {0,1} the top eigenvalue is 3; singletons top out at 2.9.
    Matrix a(3, 3);
    a << 2, 1, 0, 1, 2, 0, 0, 0, 2.9;
    const SparseEigenResult r = sparse_leading_eigenvector(SymMatrix(a), 2);
    CHECK(r.support == std::vector<Index>{0, 1});
    CHECK(r.objective == doctest::Approx(3.0));
    const double v = 1.0 / std::sqrt(2.0);
    CHECK(r.vector(0) == doctest::Approx(v));
    CHECK(r.vector(1) == doctest::Approx(v));
    CHECK(r.vector(2) == 0.0);
}

TEST_CASE("agreement with an independent brute-force enumeration") {
    for (std::uint64_t seed : {4ULL, 5ULL, 6ULL}) {
        const SymMatrix m = random_sym(7, seed);
        for (int s : {1, 2, 3}) {
            const SparseEigenResult r = sparse_leading_eigenvector(m, s);
            const double brute = brute_force_restricted_norm(m, s);
            CHECK(r.objective == doctest::Approx(brute).epsilon(1e-12));
            CHECK(restricted_spectral_norm(m, s) == doctest::Approx(brute).epsilon(1e-12));
            // The returned vector attains its stated objective in absolute value.
            CHECK(std::abs(r.vector.dot(m.values() * r.vector)) ==
                  doctest::Approx(r.objective).epsilon(1e-12));
            CHECK(r.vector.norm() == doctest::Approx(1.0));
            CHECK(static_cast<int>(r.support.size()) <= s);
        }
    }
}

TEST_CASE("restricted norm at full sparsity equals the spectral norm") {
    const SymMatrix m = random_sym(6, 99);
    CHECK(restricted_spectral_norm(m, 6) ==
          doctest::Approx(sym_spectral_norm(m)).epsilon(1e-12));
}

TEST_CASE("combinatorial budget guard") {
    const SymMatrix m = random_sym(40, 1);
    CHECK_THROWS_AS(sparse_leading_eigenvector(m, 20), CombinatorialBudgetError);
    CHECK_THROWS_AS(restricted_spectral_norm(m, 20), CombinatorialBudgetError);
    CHECK_THROWS_AS(sparse_leading_eigenvector(m, 0), std::invalid_argument);
    CHECK_THROWS_AS(sparse_leading_eigenvector(m, 41), std::invalid_argument);
}
