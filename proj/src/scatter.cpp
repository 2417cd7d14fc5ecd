#include "eca/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eca/errors.hpp"
#include "eca/rng.hpp"

namespace eca {

namespace {

// Pairs (i, j), i < j, enumerated lexicographically and chopped into fixed
// blocks; block b feeds stripe b % kStripes.  Every stripe is owned by one
// thread and stripes are reduced in index order, so the accumulation order
// -- hence the bits of the result -- does not depend on the thread count.
constexpr long kPairBlock = 8192;
constexpr int kStripes = 64;

long pair_count(long n) { return n * (n - 1) / 2; }

// Number of pairs whose first element is < i.
long pairs_before_row(long i, long n) { return i * n - i * (i + 1) / 2; }

// Inverse of the lexicographic enumeration, with integer fix-up after the
// floating-point guess.
std::pair<long, long> pair_from_index(long p, long n) {
    double guess = static_cast<double>(n) - 0.5 -
                   std::sqrt(std::max(0.0, (n - 0.5) * (n - 0.5) - 2.0 * static_cast<double>(p)));
    long i = std::clamp(static_cast<long>(guess), 0L, n - 2);
    while (i > 0 && pairs_before_row(i, n) > p) --i;
    while (i < n - 2 && pairs_before_row(i + 1, n) <= p) ++i;
    const long j = i + 1 + (p - pairs_before_row(i, n));
    return {i, j};
}

void check_data(const Matrix& x, const char* who) {
    if (x.rows() < 2) {
        throw std::invalid_argument(std::string(who) + ": need at least 2 observations, got " +
                                    std::to_string(x.rows()));
    }
    if (x.cols() < 1) {
        throw std::invalid_argument(std::string(who) + ": need at least 1 variable");
    }
    if (!x.allFinite()) {
        throw std::invalid_argument(std::string(who) + ": data contains non-finite entries");
    }
}

double sign_of(double a) { return (a > 0.0) ? 1.0 : (a < 0.0 ? -1.0 : 0.0); }

}  // namespace

SymMatrix multivariate_kendall(const Matrix& x, DegeneratePairPolicy policy, int threads) {
    check_data(x, "multivariate_kendall");
    const long n = x.rows();
    const Index d = x.cols();
    const long npairs = pair_count(n);
    const long nblocks = (npairs + kPairBlock - 1) / kPairBlock;
    const int stripes = static_cast<int>(std::min<long>(kStripes, nblocks));
    const int nthreads = std::max(1, std::min(threads, stripes));

    // Column-major copy so each observation is a contiguous column.
    const Matrix xt = x.transpose();

    std::vector<Matrix> accum(stripes, Matrix::Zero(d, d));
    std::vector<long> kept(stripes, 0);
    std::vector<long> first_degenerate(stripes, -1);

    auto run_stripe_set = [&](int thread_id) {
        Vector u(d);
        for (int s = thread_id; s < stripes; s += nthreads) {
            auto sym = accum[s].selfadjointView<Eigen::Lower>();
            for (long b = s; b < nblocks; b += stripes) {
                const long begin = b * kPairBlock;
                const long end = std::min(npairs, begin + kPairBlock);
                auto [i, j] = pair_from_index(begin, n);
                for (long p = begin; p < end; ++p) {
                    u = xt.col(i) - xt.col(j);
                    const double norm2 = u.squaredNorm();
                    if (norm2 > 0.0) {
                        u /= std::sqrt(norm2);
                        sym.rankUpdate(u, 1.0);
                        ++kept[s];
                    } else if (first_degenerate[s] < 0) {
                        first_degenerate[s] = p;
                    }
                    if (++j == n) {
                        ++i;
                        j = i + 1;
                    }
                }
            }
        }
    };

    if (nthreads == 1) {
        run_stripe_set(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(run_stripe_set, t);
        for (auto& th : pool) th.join();
    }

    if (policy == DegeneratePairPolicy::Error) {
        long worst = -1;
        for (long p : first_degenerate) {
            if (p >= 0 && (worst < 0 || p < worst)) worst = p;
        }
        if (worst >= 0) {
            auto [i, j] = pair_from_index(worst, n);
            throw DegenerateDataError("multivariate_kendall: observations " + std::to_string(i) +
                                      " and " + std::to_string(j) +
                                      " are identical; the pairwise kernel is undefined "
                                      "(use the Skip policy to drop such pairs)");
        }
    }
    long total_kept = 0;
    for (long k : kept) total_kept += k;
    if (total_kept == 0) {
        throw DegenerateDataError("multivariate_kendall: every observation pair is degenerate");
    }

    Matrix k_lower = Matrix::Zero(d, d);
    for (int s = 0; s < stripes; ++s) k_lower += accum[s];
    k_lower /= static_cast<double>(total_kept);
    Matrix k = k_lower.selfadjointView<Eigen::Lower>();
    return SymMatrix(std::move(k), ScatterKind::MultivariateKendall);
}

SymMatrix marginal_kendall_corr(const Matrix& x) {
    check_data(x, "marginal_kendall_corr");
    const long n = x.rows();
    const Index d = x.cols();
    const Matrix xt = x.transpose();

    Matrix accum = Matrix::Zero(d, d);
    auto sym = accum.selfadjointView<Eigen::Lower>();
    Vector s(d);
    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
            s = (xt.col(i) - xt.col(j)).unaryExpr(&sign_of);
            sym.rankUpdate(s, 1.0);
        }
    }
    accum /= static_cast<double>(pair_count(n));
    Matrix tau = accum.selfadjointView<Eigen::Lower>();
    Matrix r = tau.unaryExpr([](double t) { return std::sin(std::numbers::pi / 2.0 * t); });
    return SymMatrix(std::move(r), ScatterKind::MarginalKendallCorr);
}

SymMatrix tca_covariance(const Matrix& x) {
    check_data(x, "tca_covariance");
    const long n = x.rows();
    const Index d = x.cols();
    Vector sd(d);
    for (Index j = 0; j < d; ++j) {
        const double mean = x.col(j).mean();
        const double ss = (x.col(j).array() - mean).square().sum();
        sd[j] = std::sqrt(ss / static_cast<double>(n - 1));
        if (!(sd[j] > 0.0)) {
            throw DegenerateDataError("tca_covariance: column " + std::to_string(j) +
                                      " has zero variance");
        }
    }
    const Matrix r = marginal_kendall_corr(x).values();
    Matrix s(d, d);
    for (Index c = 0; c < d; ++c) {
        for (Index rw = 0; rw < d; ++rw) {
            s(rw, c) = r(rw, c) * (sd[rw] * sd[c]);
        }
    }
    return SymMatrix(std::move(s), ScatterKind::TcaCovariance);
}

SymMatrix pearson_cov(const Matrix& x) {
    check_data(x, "pearson_cov");
    const long n = x.rows();
    const Index d = x.cols();
    const Matrix centered = x.rowwise() - x.colwise().mean();
    Matrix accum = Matrix::Zero(d, d);
    accum.selfadjointView<Eigen::Lower>().rankUpdate(centered.adjoint(),
                                                     1.0 / static_cast<double>(n - 1));
    Matrix cov = accum.selfadjointView<Eigen::Lower>();
    return SymMatrix(std::move(cov), ScatterKind::PearsonCov);
}

PopulationKendallEigs population_kendall_eigs_mc(const Vector& sigma_eigs, long mc_samples,
                                                 std::uint64_t seed) {
    const Index q = sigma_eigs.size();
    if (q < 1) throw std::invalid_argument("population_kendall_eigs_mc: empty spectrum");
    if (mc_samples < 2) {
        throw std::invalid_argument("population_kendall_eigs_mc: need at least 2 samples");
    }
    double total = 0.0;
    for (Index i = 0; i < q; ++i) {
        if (!(sigma_eigs[i] >= 0.0)) {
            throw std::invalid_argument(
                "population_kendall_eigs_mc: eigenvalues must be nonnegative");
        }
        if (i > 0 && sigma_eigs[i] > sigma_eigs[i - 1]) {
            throw std::invalid_argument(
                "population_kendall_eigs_mc: eigenvalues must be sorted descending");
        }
        total += sigma_eigs[i];
    }
    if (!(total > 0.0)) {
        throw std::invalid_argument("population_kendall_eigs_mc: spectrum is identically zero");
    }

    // Tie groups of exactly equal eigenvalues; ratios within a group are
    // exchangeable and get replaced by their group mean each draw.
    std::vector<std::pair<Index, Index>> groups;  // [begin, end)
    for (Index b = 0; b < q;) {
        Index e = b + 1;
        while (e < q && sigma_eigs[e] == sigma_eigs[b]) ++e;
        groups.emplace_back(b, e);
        b = e;
    }

    auto rng = make_rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector mean = Vector::Zero(q);
    Vector m2 = Vector::Zero(q);
    Vector ratio(q);
    for (long t = 0; t < mc_samples; ++t) {
        double den = 0.0;
        do {
            den = 0.0;
            for (Index i = 0; i < q; ++i) {
                if (sigma_eigs[i] > 0.0) {
                    const double y = normal(rng);
                    ratio[i] = sigma_eigs[i] * y * y;
                    den += ratio[i];
                } else {
                    ratio[i] = 0.0;
                }
            }
        } while (!(den > 0.0));
        ratio /= den;
        for (const auto& [b, e] : groups) {
            if (e - b > 1) {
                const double g = ratio.segment(b, e - b).mean();
                ratio.segment(b, e - b).setConstant(g);
            }
        }
        // Welford update per coordinate.
        for (Index i = 0; i < q; ++i) {
            const double delta = ratio[i] - mean[i];
            mean[i] += delta / static_cast<double>(t + 1);
            m2[i] += delta * (ratio[i] - mean[i]);
        }
    }

    PopulationKendallEigs out;
    const double sum = mean.sum();
    out.values = mean / sum;
    out.std_errors = (m2 / (static_cast<double>(mc_samples) *
                            static_cast<double>(mc_samples - 1)))
                         .cwiseSqrt() / sum;
    return out;
}

}  // namespace eca
