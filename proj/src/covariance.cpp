#include "eca/covariance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eca {

void validate(const CovarianceSpec& spec) {
    if (spec.d < 1) {
        throw std::invalid_argument("CovarianceSpec: dimension must be >= 1, got " +
                                    std::to_string(spec.d));
    }
    if (!(spec.baseline > 0.0)) {
        throw std::invalid_argument("CovarianceSpec: baseline eigenvalue must be > 0");
    }
    long total_support = 0;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < spec.components.size(); ++j) {
        const auto& c = spec.components[j];
        if (c.support < 1) {
            throw std::invalid_argument("CovarianceSpec: component " + std::to_string(j) +
                                        " has support " + std::to_string(c.support) +
                                        ", must be >= 1");
        }
        if (!(c.omega < prev)) {
            throw std::invalid_argument(
                "CovarianceSpec: spike eigenvalues must be strictly decreasing; "
                "component " + std::to_string(j) + " violates the order");
        }
        if (!(c.omega > spec.baseline)) {
            throw std::invalid_argument(
                "CovarianceSpec: spike eigenvalue " + std::to_string(c.omega) +
                " must exceed the baseline " + std::to_string(spec.baseline));
        }
        prev = c.omega;
        total_support += c.support;
    }
    if (total_support > spec.d) {
        throw std::invalid_argument(
            "CovarianceSpec: spike supports need " + std::to_string(total_support) +
            " coordinates but the dimension is only " + std::to_string(spec.d));
    }
}

SymMatrix build_spike_covariance(const CovarianceSpec& spec) {
    validate(spec);
    Matrix sigma = spec.baseline * Matrix::Identity(spec.d, spec.d);
    int offset = 0;
    for (const auto& c : spec.components) {
        const double fill = (c.omega - spec.baseline) / static_cast<double>(c.support);
        for (int a = 0; a < c.support; ++a) {
            for (int b = 0; b < c.support; ++b) {
                sigma(offset + a, offset + b) += fill;
            }
        }
        offset += c.support;
    }
    return SymMatrix(std::move(sigma), ScatterKind::Generic);
}

Vector spike_eigenvector(const CovarianceSpec& spec, int j) {
    validate(spec);
    if (j < 0 || j >= static_cast<int>(spec.components.size())) {
        throw std::invalid_argument("spike_eigenvector: component index " +
                                    std::to_string(j) + " out of range");
    }
    Vector v = Vector::Zero(spec.d);
    int offset = 0;
    for (int i = 0; i < j; ++i) offset += spec.components[i].support;
    const int s = spec.components[j].support;
    v.segment(offset, s).setConstant(1.0 / std::sqrt(static_cast<double>(s)));
    return v;
}

std::vector<Index> spike_support(const CovarianceSpec& spec, int j) {
    validate(spec);
    if (j < 0 || j >= static_cast<int>(spec.components.size())) {
        throw std::invalid_argument("spike_support: component index " +
                                    std::to_string(j) + " out of range");
    }
    int offset = 0;
    for (int i = 0; i < j; ++i) offset += spec.components[i].support;
    std::vector<Index> idx(spec.components[j].support);
    for (std::size_t a = 0; a < idx.size(); ++a) idx[a] = offset + static_cast<Index>(a);
    return idx;
}

Vector spike_eigenvalues(const CovarianceSpec& spec) {
    validate(spec);
    Vector lambda = Vector::Constant(spec.d, spec.baseline);
    for (std::size_t j = 0; j < spec.components.size(); ++j) {
        lambda[static_cast<Index>(j)] = spec.components[j].omega;
    }
    return lambda;
}

}  // namespace eca
