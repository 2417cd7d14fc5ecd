#pragma once

#include <cstdint>
#include <random>

#include "eca/types.hpp"

namespace eca {

// Law of the scalar radius xi in the stochastic representation
//   X = mu + xi * A * U,   U uniform on the unit sphere of R^q.
enum class GeneratorKind {
    GaussianChi,    // xi = chi_q                      -> Gaussian data
    MultivariateT,  // xi = sqrt(kappa) chi_q / chi_kappa
    FRatio,         // xi ~ F(q, 1), never rescaled (no finite moments)
    Exp1,           // xi ~ Exp(1)
    Cauchy,         // xi = sqrt(q) chi_q / chi_1, never rescaled
};

struct Generator {
    GeneratorKind kind = GeneratorKind::GaussianChi;
    double kappa = 0.0;  // degrees of freedom, MultivariateT only

    static Generator gaussian_chi() { return {GeneratorKind::GaussianChi, 0.0}; }
    static Generator multivariate_t(double kappa);
    static Generator f_ratio() { return {GeneratorKind::FRatio, 0.0}; }
    static Generator exp1() { return {GeneratorKind::Exp1, 0.0}; }
    static Generator cauchy() { return {GeneratorKind::Cauchy, 0.0}; }
};

bool has_finite_second_moment(const Generator& g);

// E[xi^2] for a rank-q model; throws std::invalid_argument when infinite.
double xi_second_moment(const Generator& g, int q);

// One radius draw.  Always >= 0.
double draw_xi(const Generator& g, int q, std::mt19937_64& rng);

// Elliptical model with factor A (d x q, so q = rank of the scatter A A^T).
// When `normalize` is set, samples are scaled by sqrt(q / E[xi^2]) so the
// population covariance equals A A^T; that requires a finite second moment.
struct EllipticalModel {
    Vector mu;
    Matrix factor;  // d x q
    Generator generator;
    bool normalize = false;

    Index dim() const { return mu.size(); }
    Index rank() const { return factor.cols(); }
};

void validate(const EllipticalModel& model);

// Builds the factor from a PSD scatter matrix via its eigendecomposition:
// A = U_q diag(sqrt(lambda_q)) over the eigenvalues above 1e-12 * lambda_max.
EllipticalModel model_from_covariance(Vector mu, const SymMatrix& sigma,
                                      const Generator& generator, bool normalize);

// n independent rows mu + xi_i * scale * A * U_i.  Fixed seed gives a
// bitwise-identical matrix.  Per row the draw order is: the q sphere
// normals, then the radius.
Matrix sample(const EllipticalModel& model, int n, std::uint64_t seed);

// Uniform draw on the unit sphere of R^q (a Gaussian draw, normalized;
// redrawn in the measure-zero event of a zero vector).
Vector sample_unit_sphere(int q, std::mt19937_64& rng);
Vector sample_unit_sphere(int q, std::uint64_t seed);

}  // namespace eca
