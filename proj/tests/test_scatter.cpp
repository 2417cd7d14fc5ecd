#include <cmath>
#include <string>

#include "doctest.h"
#include "eca/errors.hpp"
#include "eca/rng.hpp"
#include "eca/scatter.hpp"
#include "eca/spectral.hpp"

using namespace eca;

namespace {
Matrix scatter_test_data(int n, int d, std::uint64_t seed) {
    auto rng = make_rng(seed);
    std::normal_distribution<double> normal;
    Matrix x(n, d);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) x(i, j) = normal(rng);
    }
    return x;
}
}  // namespace

TEST_CASE("pairwise sign scatter of three planar points, hand computed") {
    // Differences (-1,0), (0,-1), (1,-1)/sqrt(2) give
    // mean of outer products [[1/2, -1/6], [-1/6, 1/2]].
    Matrix x(3, 2);
    x << 0, 0, 1, 0, 0, 1;
    const SymMatrix k = multivariate_kendall(x);
    CHECK(k.kind() == ScatterKind::MultivariateKendall);
    CHECK(k.values()(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(k.values()(1, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(k.values()(0, 1) == doctest::Approx(-1.0 / 6.0).epsilon(1e-12));
    CHECK(k.values()(0, 1) == k.values()(1, 0));
}

TEST_CASE("pairwise sign scatter invariants") {
    const Matrix x = scatter_test_data(40, 6, 100);
    const SymMatrix k = multivariate_kendall(x);
    CHECK(std::abs(k.values().trace() - 1.0) < 1e-12);
    const EigenResult eig = eigh_sorted(k);
    CHECK(eig.values.minCoeff() > -1e-12);
    // Exact entrywise symmetry by construction.
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) CHECK(k.values()(i, j) == k.values()(j, i));
    }
}

TEST_CASE("pairwise sign scatter is bitwise independent of the thread count") {
    const Matrix x = scatter_test_data(75, 7, 11);
    const SymMatrix k1 = multivariate_kendall(x, DegeneratePairPolicy::Error, 1);
    for (int threads : {2, 3, 5, 8}) {
        const SymMatrix kt = multivariate_kendall(x, DegeneratePairPolicy::Error, threads);
        CHECK((k1.values() - kt.values()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("degenerate pairs: error policy names the rows, skip policy renormalizes") {
    Matrix x = scatter_test_data(6, 3, 7);
    x.row(4) = x.row(1);  // one duplicated observation pair

    bool threw = false;
    try {
        multivariate_kendall(x, DegeneratePairPolicy::Error);
    } catch (const DegenerateDataError& e) {
        threw = true;
        const std::string msg = e.what();
        CHECK(msg.find('1') != std::string::npos);
        CHECK(msg.find('4') != std::string::npos);
    }
    CHECK(threw);

    const SymMatrix k = multivariate_kendall(x, DegeneratePairPolicy::Skip);
    CHECK(std::abs(k.values().trace() - 1.0) < 1e-12);

    // All pairs degenerate -> no kernel terms survive.
    Matrix all_same(3, 2);
    all_same << 1.0, 2.0, 1.0, 2.0, 1.0, 2.0;
    CHECK_THROWS_AS(multivariate_kendall(all_same, DegeneratePairPolicy::Skip),
                    DegenerateDataError);
}

TEST_CASE("affine invariance of the pairwise sign scatter is exact on dyadic data") {
    // Entries on the 2^-10 grid, scale a power of two, shift on the same grid:
    // every intermediate is exact, so the scatter matrices match bitwise.
    auto rng = make_rng(2024);
    Matrix x(12, 4);
    for (int i = 0; i < 12; ++i) {
        for (int j = 0; j < 4; ++j) {
            const long long m =
                static_cast<long long>(rng() % (1ULL << 21)) - (1LL << 20);
            x(i, j) = std::ldexp(static_cast<double>(m), -10);
        }
    }
    Vector b(4);
    for (int j = 0; j < 4; ++j) {
        const long long m = static_cast<long long>(rng() % (1ULL << 21)) - (1LL << 20);
        b(j) = std::ldexp(static_cast<double>(m), -10);
    }
    const double c = -8.0;  // power-of-two scale
    const Matrix y = (x.array() * c).matrix().rowwise() + b.transpose();

    const SymMatrix kx = multivariate_kendall(x, DegeneratePairPolicy::Skip);
    const SymMatrix ky = multivariate_kendall(y, DegeneratePairPolicy::Skip);
    CHECK((kx.values() - ky.values()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("sin-transformed pairwise-sign correlation, hand computed") {
    // Columns (1,2,3) and (3,1,2): concordant/discordant counts give
    // tau = -1/3, so the transformed correlation is sin(-pi/6) = -1/2.
    Matrix x(3, 2);
    x << 1, 3, 2, 1, 3, 2;
    const SymMatrix r = marginal_kendall_corr(x);
    CHECK(r.kind() == ScatterKind::MarginalKendallCorr);
    CHECK(r.values()(0, 0) == doctest::Approx(1.0));
    CHECK(r.values()(1, 1) == doctest::Approx(1.0));
    CHECK(r.values()(0, 1) == doctest::Approx(-0.5).epsilon(1e-12));

    // Perfectly monotone columns give +1 / -1.
    Matrix mono(4, 2);
    mono << 1, 8, 2, 6, 3, 4, 4, 2;
    const SymMatrix rm = marginal_kendall_corr(mono);
    CHECK(rm.values()(0, 1) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("sd-rescaled transformed correlation recomputed directly") {
    const Matrix x = scatter_test_data(30, 4, 55);
    const SymMatrix t = tca_covariance(x);
    const SymMatrix r = marginal_kendall_corr(x);
    CHECK(t.kind() == ScatterKind::TcaCovariance);

    Vector sd(4);
    for (int j = 0; j < 4; ++j) {
        const double mean = x.col(j).mean();
        sd(j) = std::sqrt((x.col(j).array() - mean).square().sum() / (x.rows() - 1));
    }
    for (int a = 0; a < 4; ++a) {
        for (int bcol = 0; bcol < 4; ++bcol) {
            CHECK(t.values()(a, bcol) ==
                  doctest::Approx(r.values()(a, bcol) * sd(a) * sd(bcol)).epsilon(1e-12));
        }
    }

    // A constant column has no scale.
    Matrix bad = x;
    bad.col(2).setConstant(3.25);
    CHECK_THROWS_AS(tca_covariance(bad), DegenerateDataError);
}

TEST_CASE("sample covariance matches the direct formula") {
    const Matrix x = scatter_test_data(25, 3, 77);
    const SymMatrix s = pearson_cov(x);
    CHECK(s.kind() == ScatterKind::PearsonCov);
    const Matrix centered = x.rowwise() - x.colwise().mean();
    const Matrix direct = centered.transpose() * centered / (x.rows() - 1.0);
    CHECK((s.values() - direct).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("population spectrum by Monte Carlo: degenerate and tied cases") {
    SUBCASE("single nonzero eigenvalue is exact") {
        Vector eigs(3);
        eigs << 2.0, 0.0, 0.0;
        const PopulationKendallEigs out = population_kendall_eigs_mc(eigs, 500, 1);
        CHECK(out.values(0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(out.values(1) == 0.0);
        CHECK(out.std_errors(0) == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("all-equal eigenvalues average to 1/d with zero spread") {
        const PopulationKendallEigs out =
            population_kendall_eigs_mc(Vector::Constant(5, 3.7), 400, 2);
        for (int j = 0; j < 5; ++j) {
            CHECK(out.values(j) == doctest::Approx(0.2).epsilon(1e-13));
            CHECK(out.std_errors(j) < 1e-15);
        }
    }
    SUBCASE("diag(4,1) leading value approaches 2/3") {
        Vector eigs(2);
        eigs << 4.0, 1.0;
        const PopulationKendallEigs out = population_kendall_eigs_mc(eigs, 60000, 3);
        CHECK(out.values(0) == doctest::Approx(2.0 / 3.0).epsilon(0.01));
        CHECK(std::abs(out.values(0) - 2.0 / 3.0) < 5.0 * out.std_errors(0));
        CHECK(out.values.sum() == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("input validation") {
        Vector up(2);
        up << 1.0, 2.0;  // not descending
        CHECK_THROWS_AS(population_kendall_eigs_mc(up, 100, 1), std::invalid_argument);
        CHECK_THROWS_AS(population_kendall_eigs_mc(Vector::Ones(2), 1, 1),
                        std::invalid_argument);
        CHECK_THROWS_AS(population_kendall_eigs_mc(Vector::Zero(2), 100, 1),
                        std::invalid_argument);
    }
}
