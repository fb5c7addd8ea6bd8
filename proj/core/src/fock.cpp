#include "lindsq/fock.hpp"

#include <cmath>

#include "lindsq/errors.hpp"

namespace lindsq {

namespace {

void require_dim(std::size_t dim) {
    if (dim < 2) throw shape_error("fock: truncation dimension must be at least 2");
}

}  // namespace

CMatrix annihilation_op(std::size_t dim, double theta) {
    require_dim(dim);
    CMatrix a(dim, dim);
    const complexd phase = std::polar(1.0, theta);
    for (std::size_t n = 0; n + 1 < dim; ++n)
        a(n, n + 1) = phase * std::sqrt(static_cast<double>(n + 1));
    return a;
}

CMatrix creation_op(std::size_t dim, double theta) {
    return annihilation_op(dim, theta).adjoint();
}

CMatrix number_op(std::size_t dim) {
    require_dim(dim);
    CMatrix n(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

CMatrix squeeze_op(std::size_t dim, complexd eps, double theta) {
    require_dim(dim);
    if (eps == complexd{0.0, 0.0}) return CMatrix::identity(dim);
    const CMatrix a = annihilation_op(dim, theta);
    const CMatrix ad = a.adjoint();
    CMatrix gen = 0.5 * eps * (ad * ad) - 0.5 * std::conj(eps) * (a * a);
    return expm(gen);
}

DensityMatrix fock_state(std::size_t n, std::size_t dim) {
    require_dim(dim);
    if (2 * n >= dim)
        throw range_error("fock_state: level too close to truncation (need n < d/2)");
    DensityMatrix rho{dim, CMatrix(dim, dim)};
    rho.mat(n, n) = 1.0;
    return rho;
}

DensityMatrix coherent_state(complexd alpha, std::size_t dim, double theta) {
    require_dim(dim);
    if (std::norm(alpha) >= 0.25 * static_cast<double>(dim))
        throw range_error("coherent_state: |alpha|^2 too large for truncation (need < d/4)");
    // amplitudes of the eigenvector of the phased annihilation operator
    std::vector<complexd> c(dim);
    c[0] = 1.0;
    const complexd step = alpha * std::polar(1.0, -theta);
    for (std::size_t n = 0; n + 1 < dim; ++n)
        c[n + 1] = c[n] * step / std::sqrt(static_cast<double>(n + 1));
    double norm2 = 0.0;
    for (const auto& v : c) norm2 += std::norm(v);
    const double inv = 1.0 / norm2;
    DensityMatrix rho{dim, CMatrix(dim, dim)};
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) rho.mat(i, j) = c[i] * std::conj(c[j]) * inv;
    return rho;
}

DensityMatrix thermal_state(double nbar, std::size_t dim) {
    require_dim(dim);
    if (nbar < 0.0) throw range_error("thermal_state: nbar must be nonnegative");
    if (nbar >= 0.25 * static_cast<double>(dim))
        throw range_error("thermal_state: nbar too large for truncation (need < d/4)");
    const double x = nbar / (1.0 + nbar);
    std::vector<double> w(dim);
    double sum = 0.0;
    double wn = 1.0;
    for (std::size_t n = 0; n < dim; ++n) {
        w[n] = wn;
        sum += wn;
        wn *= x;
    }
    DensityMatrix rho{dim, CMatrix(dim, dim)};
    for (std::size_t n = 0; n < dim; ++n) rho.mat(n, n) = w[n] / sum;
    return rho;
}

CMatrix level_projector(std::size_t dim, std::size_t d_int) {
    require_dim(dim);
    if (d_int > dim) throw shape_error("level_projector: d_int exceeds dim");
    CMatrix p(dim, dim);
    for (std::size_t k = 0; k < d_int; ++k) p(k, k) = 1.0;
    return p;
}

}  // namespace lindsq
