#include "eca/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "eca/rng.hpp"
#include "eca/spectral.hpp"

namespace eca {

Generator Generator::multivariate_t(double kappa) {
    if (!(kappa >= 1.0)) {
        throw std::invalid_argument("Generator: t degrees of freedom must be >= 1, got " +
                                    std::to_string(kappa));
    }
    return {GeneratorKind::MultivariateT, kappa};
}

bool has_finite_second_moment(const Generator& g) {
    switch (g.kind) {
        case GeneratorKind::GaussianChi: return true;
        case GeneratorKind::MultivariateT: return g.kappa > 2.0;
        case GeneratorKind::Exp1: return true;
        case GeneratorKind::FRatio: return false;
        case GeneratorKind::Cauchy: return false;
    }
    return false;
}

double xi_second_moment(const Generator& g, int q) {
    if (q < 1) throw std::invalid_argument("xi_second_moment: rank must be >= 1");
    switch (g.kind) {
        case GeneratorKind::GaussianChi:
            return static_cast<double>(q);
        case GeneratorKind::MultivariateT:
            if (g.kappa > 2.0) return q * g.kappa / (g.kappa - 2.0);
            break;
        case GeneratorKind::Exp1:
            return 2.0;  // second moment of Exp(1)
        case GeneratorKind::FRatio:
        case GeneratorKind::Cauchy:
            break;
    }
    throw std::invalid_argument("xi_second_moment: generator has no finite second moment");
}

namespace {

// sqrt of a chi-squared draw, guarded against a zero draw so downstream
// ratios stay finite.
double draw_chi(double dof, std::mt19937_64& rng) {
    std::chi_squared_distribution<double> chi2(dof);
    double v = 0.0;
    do {
        v = chi2(rng);
    } while (!(v > 0.0));
    return std::sqrt(v);
}

}  // namespace

double draw_xi(const Generator& g, int q, std::mt19937_64& rng) {
    if (q < 1) throw std::invalid_argument("draw_xi: rank must be >= 1");
    switch (g.kind) {
        case GeneratorKind::GaussianChi:
            return draw_chi(static_cast<double>(q), rng);
        case GeneratorKind::MultivariateT:
            return std::sqrt(g.kappa) * draw_chi(static_cast<double>(q), rng) /
                   draw_chi(g.kappa, rng);
        case GeneratorKind::FRatio: {
            std::fisher_f_distribution<double> f(static_cast<double>(q), 1.0);
            return f(rng);
        }
        case GeneratorKind::Exp1: {
            std::exponential_distribution<double> exp1(1.0);
            return exp1(rng);
        }
        case GeneratorKind::Cauchy:
            return std::sqrt(static_cast<double>(q)) *
                   draw_chi(static_cast<double>(q), rng) / draw_chi(1.0, rng);
    }
    throw std::invalid_argument("draw_xi: unknown generator");
}

void validate(const EllipticalModel& model) {
    if (model.mu.size() != model.factor.rows()) {
        throw std::invalid_argument("EllipticalModel: mu has length " +
                                    std::to_string(model.mu.size()) + " but the factor has " +
                                    std::to_string(model.factor.rows()) + " rows");
    }
    if (model.factor.cols() < 1) {
        throw std::invalid_argument("EllipticalModel: factor must have at least one column");
    }
    if (!model.mu.allFinite() || !model.factor.allFinite()) {
        throw std::invalid_argument("EllipticalModel: non-finite entries");
    }
    if (model.generator.kind == GeneratorKind::MultivariateT && !(model.generator.kappa >= 1.0)) {
        throw std::invalid_argument("EllipticalModel: t degrees of freedom must be >= 1");
    }
    if (model.normalize && !has_finite_second_moment(model.generator)) {
        throw std::invalid_argument(
            "EllipticalModel: normalize requires a finite second moment, which this "
            "radius law lacks; sample it unscaled instead");
    }
}

EllipticalModel model_from_covariance(Vector mu, const SymMatrix& sigma,
                                      const Generator& generator, bool normalize) {
    if (mu.size() != sigma.dim()) {
        throw std::invalid_argument("model_from_covariance: mu/scatter dimension mismatch");
    }
    const EigenResult eig = eigh_sorted(sigma);
    const double lambda_max = eig.values[0];
    if (!(lambda_max > 0.0)) {
        throw std::invalid_argument("model_from_covariance: scatter matrix must be nonzero PSD");
    }
    if (eig.values[eig.values.size() - 1] < -1e-8 * lambda_max) {
        throw std::invalid_argument("model_from_covariance: scatter matrix is not PSD");
    }
    const double tol = 1e-12 * lambda_max;
    Index q = 0;
    while (q < eig.values.size() && eig.values[q] > tol) ++q;
    Matrix factor(sigma.dim(), q);
    for (Index j = 0; j < q; ++j) {
        factor.col(j) = eig.vectors.col(j) * std::sqrt(eig.values[j]);
    }
    EllipticalModel model{std::move(mu), std::move(factor), generator, normalize};
    validate(model);
    return model;
}

Vector sample_unit_sphere(int q, std::mt19937_64& rng) {
    if (q < 1) throw std::invalid_argument("sample_unit_sphere: dimension must be >= 1");
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector u(q);
    double norm = 0.0;
    do {
        for (int i = 0; i < q; ++i) u[i] = normal(rng);
        norm = u.norm();
    } while (!(norm > 0.0));
    return u / norm;
}

Vector sample_unit_sphere(int q, std::uint64_t seed) {
    auto rng = make_rng(seed);
    return sample_unit_sphere(q, rng);
}

Matrix sample(const EllipticalModel& model, int n, std::uint64_t seed) {
    validate(model);
    if (n < 1) throw std::invalid_argument("sample: need n >= 1 rows, got " + std::to_string(n));
    const int q = static_cast<int>(model.rank());
    const double scale =
        model.normalize ? std::sqrt(static_cast<double>(q) / xi_second_moment(model.generator, q))
                        : 1.0;
    auto rng = make_rng(seed);
    Matrix x(n, model.dim());
    for (int i = 0; i < n; ++i) {
        const Vector u = sample_unit_sphere(q, rng);
        const double xi = draw_xi(model.generator, q, rng);
        x.row(i) = (model.mu + (xi * scale) * (model.factor * u)).transpose();
    }
    return x;
}

}  // namespace eca
