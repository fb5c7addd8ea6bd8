#include "lindsq/superop.hpp"

#include <cmath>

#include "lindsq/errors.hpp"
#include "lindsq/fock.hpp"

namespace lindsq {

CMatrix vec(const CMatrix& x) {
    if (!x.is_square()) throw shape_error("vec: matrix must be square");
    CMatrix v(x.rows() * x.cols(), 1);
    // row-major storage already matches the enumeration order
    for (std::size_t k = 0; k < x.size(); ++k) v(k, 0) = x.data()[k];
    return v;
}

CMatrix unvec(const CMatrix& v, std::size_t dim) {
    if (v.cols() != 1 || v.rows() != dim * dim)
        throw shape_error("unvec: length does not match dim^2");
    CMatrix x(dim, dim);
    for (std::size_t k = 0; k < dim * dim; ++k) x.data()[k] = v(k, 0);
    return x;
}

SuperOp sandwich_mul(const CMatrix& a, const CMatrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
        throw shape_error("sandwich_mul: operands must be square and equal-sized");
    return SuperOp{a.rows(), kron(a, b.transpose())};
}

SuperOp left_mul(const CMatrix& a) {
    return SuperOp{a.rows(), kron(a, CMatrix::identity(a.rows()))};
}

SuperOp right_mul(const CMatrix& b) {
    return SuperOp{b.rows(), kron(CMatrix::identity(b.rows()), b.transpose())};
}

GeneratorSet k_generators(std::size_t dim, double theta) {
    if (dim < 4) throw shape_error("k_generators: need dim >= 4");
    const CMatrix a = annihilation_op(dim, theta);
    const CMatrix ad = a.adjoint();
    const CMatrix n = number_op(dim);
    const CMatrix a2 = a * a;
    const CMatrix ad2 = ad * ad;
    const CMatrix id = CMatrix::identity(dim);

    GeneratorSet g;
    g.k3 = SuperOp{dim, 0.5 * (kron(n, id) - kron(id, n))};
    g.kp = SuperOp{dim, 0.5 * (kron(ad2, id) - kron(id, ad2.transpose()))};
    g.km = SuperOp{dim, 0.5 * (kron(a2, id) - kron(id, a2.transpose()))};
    return g;
}

GeneratorSet ktilde_generators(std::size_t dim, double theta) {
    if (dim < 4) throw shape_error("ktilde_generators: need dim >= 4");
    const CMatrix a = annihilation_op(dim, theta);
    const CMatrix ad = a.adjoint();
    const CMatrix n = number_op(dim);
    const CMatrix id = CMatrix::identity(dim);

    GeneratorSet g;
    g.k3 = SuperOp{dim, 0.5 * (kron(n, id) + kron(id, n) + CMatrix::identity(dim * dim))};
    g.kp = SuperOp{dim, kron(ad, a.transpose())};
    g.km = SuperOp{dim, kron(a, ad.transpose())};
    return g;
}

namespace {

// (C B) rho + rho (C B) - 2 B rho C, vectorized.
CMatrix dissipator_bracket(const CMatrix& b, const CMatrix& c) {
    const CMatrix cb = c * b;
    const CMatrix id = CMatrix::identity(b.rows());
    return kron(cb, id) + kron(id, cb.transpose()) - 2.0 * kron(b, c.transpose());
}

}  // namespace

SuperOp liouvillian_original(const ModelParams& p_in, std::size_t dim, double theta) {
    const ModelParams p = validated(p_in);
    const CMatrix a = annihilation_op(dim, theta);
    const CMatrix ad = a.adjoint();
    const CMatrix id = CMatrix::identity(dim);
    const CMatrix h = p.omega * (ad * a);

    const complexd mi{0.0, -1.0};
    CMatrix l = mi * (kron(h, id) - kron(id, h.transpose()));
    l -= 0.5 * p.mu * dissipator_bracket(a, ad);
    l -= 0.5 * p.nu * dissipator_bracket(ad, a);
    l -= 0.5 * p.kappa * dissipator_bracket(a, a);
    l -= 0.5 * std::conj(p.kappa) * dissipator_bracket(ad, ad);
    return SuperOp{dim, std::move(l)};
}

TransformedLiouvillian liouvillian_transformed(const ModelParams& p_in, const SqueezeSolution& s,
                                               const TransformedCoeffs& tc, std::size_t dim,
                                               double theta) {
    const ModelParams p = validated(p_in);
    const double k = std::abs(p.kappa);
    const double cc = s.c * s.c + s.s * s.s;
    const double cs = s.c * s.s;
    const complexd eip = std::polar(1.0, s.phi);
    const complexd iw{0.0, p.omega};

    const GeneratorSet kg = k_generators(dim, theta);
    const GeneratorSet tg = ktilde_generators(dim, theta);

    TransformedLiouvillian out;
    out.hamiltonian =
        SuperOp{dim, (-2.0 * iw * cc) * kg.k3.mat + (2.0 * iw * cs) * eip * kg.kp.mat +
                         (2.0 * iw * cs) * std::conj(eip) * kg.km.mat};
    const double kt3_coef = (p.mu + p.nu) * cc - 4.0 * k * cs;  // equals mu' + nu'
    out.dissipative = SuperOp{dim, (-kt3_coef) * tg.k3.mat + complexd{tc.nu_p, 0.0} * tg.kp.mat +
                                       complexd{tc.mu_p, 0.0} * tg.km.mat};
    out.full = SuperOp{dim, complexd{0.5 * (p.mu - p.nu), 0.0} * CMatrix::identity(dim * dim) +
                                out.hamiltonian.mat + out.dissipative.mat};
    return out;
}

SuperOp pair_projector(std::size_t dim, std::size_t d_int) {
    const CMatrix p = level_projector(dim, d_int);
    return SuperOp{dim, kron(p, p)};
}

CMatrix trace_row(const SuperOp& m) {
    const std::size_t d = m.dim;
    CMatrix row(1, d * d);
    for (std::size_t col = 0; col < d * d; ++col) {
        complexd sum{0.0, 0.0};
        for (std::size_t i = 0; i < d; ++i) sum += m.mat(i * d + i, col);
        row(0, col) = sum;
    }
    return row;
}

}  // namespace lindsq
