#include "lindsq/disentangle.hpp"

#include <cmath>
#include <numbers>

#include "lindsq/errors.hpp"
#include "lindsq/fock.hpp"

namespace lindsq {

namespace {

constexpr double kSingularF = 1e-12;
constexpr double kDegenerateW2 = 1e-14;

complexd f_at(complexd a, complexd w, bool degenerate, double s) {
    if (degenerate) return 1.0 - a * s;
    const complexd tw = s * w;
    return std::cosh(tw) - (a / w) * std::sinh(tw);
}

// log F(t) with the argument accumulated continuously along s in [0, t];
// F(0) = 1 fixes the branch at the start.
complexd track_log_f(complexd a, complexd w, bool degenerate, double t) {
    int steps = 8 + (degenerate ? 0 : static_cast<int>(std::ceil(4.0 * std::abs(t * w))));
    for (int attempt = 0; attempt < 10; ++attempt) {
        double arg_acc = 0.0;
        complexd prev{1.0, 0.0};
        bool ok = true;
        for (int j = 1; j <= steps; ++j) {
            const complexd fj = f_at(a, w, degenerate, t * j / steps);
            if (std::abs(fj) < kSingularF)
                throw singular_error("disentangle: |F| ~ 0 on the branch-tracking path");
            const double dphi = std::arg(fj / prev);
            if (std::abs(dphi) > std::numbers::pi / 2.0) {
                ok = false;
                break;
            }
            arg_acc += dphi;
            prev = fj;
        }
        if (ok) return complexd{std::log(std::abs(prev)), arg_acc};
        steps *= 2;
    }
    throw singular_error("disentangle: branch tracking failed to refine");
}

// exp(coef * M) for nilpotent M; the Taylor series terminates exactly.
CMatrix nilpotent_exp(const CMatrix& m, complexd coef) {
    CMatrix sum = CMatrix::identity(m.rows());
    CMatrix term = CMatrix::identity(m.rows());
    for (std::size_t j = 1; j <= m.rows(); ++j) {
        term = (coef / static_cast<double>(j)) * (term * m);
        if (max_abs(term) == 0.0) return sum;
        sum += term;
    }
    throw contract_error("nilpotent_exp: matrix is not nilpotent within its dimension");
}

}  // namespace

DisentangledFactors su11_factors(complexd a, complexd b, complexd c, double t) {
    if (!std::isfinite(t)) throw numeric_error("su11_factors: time must be finite");
    const complexd w2 = a * a - b * c;
    DisentangledFactors out;
    out.t = t;
    if (std::abs(w2) < kDegenerateW2) {
        const complexd den = 1.0 - a * t;
        if (std::abs(den) < kSingularF)
            throw singular_error("su11_factors: F(t) ~ 0 in the degenerate branch");
        out.f = den;
        out.g = b * t / den;
        out.e = c * t / den;
        out.log_f = track_log_f(a, complexd{0.0, 0.0}, true, t);
        return out;
    }
    const complexd w = std::sqrt(w2);
    const complexd tw = t * w;
    const complexd ch = std::cosh(tw);
    const complexd sh = std::sinh(tw);
    const complexd f = ch - (a / w) * sh;
    if (std::abs(f) < kSingularF) throw singular_error("su11_factors: F(t) ~ 0");
    out.f = f;
    out.g = (b / w) * sh / f;
    out.e = (c / w) * sh / f;
    out.log_f = track_log_f(a, w, false, t);
    return out;
}

DisentangledFactors hamiltonian_factors(const ModelParams& p, const SqueezeSolution& s,
                                        double t) {
    const double w = p.omega;
    const double cc = s.c * s.c + s.s * s.s;
    const double cs = s.c * s.s;
    const complexd eip = std::polar(1.0, s.phi);
    const complexd i{0.0, 1.0};

    DisentangledFactors out;
    out.t = t;
    const double sn = std::sin(t * w), csn = std::cos(t * w);
    out.f = csn + i * cc * sn;
    out.g = 2.0 * i * eip * cs * sn / out.f;
    out.e = 2.0 * i * std::conj(eip) * cs * sn / out.f;
    // same path tracking as the generic route, with a = -i w (c^2+s^2);
    // w = 0 collapses to the degenerate branch (F identically 1)
    out.log_f = track_log_f(-i * w * cc, i * w, w == 0.0, t);
    return out;
}

DisentangledFactors dissipative_factors(const TransformedCoeffs& tc, double t) {
    const complexd a{-0.5 * (tc.mu_p + tc.nu_p), 0.0};
    const complexd b{tc.nu_p, 0.0};
    const complexd c{tc.mu_p, 0.0};
    const complexd w = std::sqrt(a * a - b * c);
    const double expected = 0.5 * (tc.mu_p - tc.nu_p);  // equals (mu - nu)/2
    if (std::abs(w - complexd{expected, 0.0}) > 1e-10 * std::max(1.0, expected))
        throw numeric_error("dissipative_factors: square root differs from (mu-nu)/2");
    return su11_factors(a, b, c, t);
}

SuperOp factored_superop(const DisentangledFactors& f, const GeneratorSet& gen) {
    if (std::abs(f.f) < kSingularF) throw singular_error("factored_superop: F ~ 0");
    CMatrix m = expm(gen.kp.mat, f.g) * expm(gen.k3.mat, -2.0 * f.log_f) *
                expm(gen.km.mat, f.e);
    return SuperOp{gen.k3.dim, std::move(m)};
}

CMatrix operator_level_apply(const DisentangledFactors& f_ham, const DisentangledFactors& f_dis,
                             double rate_gap, const CMatrix& rho0, double theta) {
    if (!rho0.is_square()) throw shape_error("operator_level_apply: state must be square");
    if (std::abs(f_ham.t - f_dis.t) > 1e-12 * std::max(1.0, std::abs(f_ham.t)))
        throw contract_error("operator_level_apply: factors evaluated at different times");
    const std::size_t d = rho0.rows();
    const CMatrix a = annihilation_op(d, theta);
    const CMatrix ad = a.adjoint();

    // sum_m (E~^m/m!) a^m rho (a+)^m; powers of the truncated a vanish at m = d
    CMatrix inner = rho0;
    {
        CMatrix term = rho0;
        for (std::size_t m = 1; m <= d; ++m) {
            term = (f_dis.e / static_cast<double>(m)) * (a * term * ad);
            if (max_abs(term) == 0.0) break;
            inner += term;
        }
    }

    // two-sided F~^{-N} scaling
    std::vector<complexd> ft_pow(d);
    for (std::size_t i = 0; i < d; ++i) ft_pow[i] = std::exp(-f_dis.log_f * static_cast<double>(i));
    CMatrix mid(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) mid(i, j) = inner(i, j) * ft_pow[i] * ft_pow[j];

    // sum_n (G~^n/n!) (a+)^n ... a^n, then the 1/F~ prefactor
    CMatrix phi = mid;
    {
        CMatrix term = mid;
        for (std::size_t n = 1; n <= d; ++n) {
            term = (f_dis.g / static_cast<double>(n)) * (ad * term * a);
            if (max_abs(term) == 0.0) break;
            phi += term;
        }
    }
    phi *= std::exp(-f_dis.log_f);

    // Hamiltonian-part conjugations
    const CMatrix a2 = a * a;
    const CMatrix ad2 = ad * ad;
    CMatrix out = nilpotent_exp(a2, 0.5 * f_ham.e) * phi * nilpotent_exp(a2, -0.5 * f_ham.e);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            out(i, j) *= std::exp(f_ham.log_f * (static_cast<double>(j) - static_cast<double>(i)));
    out = nilpotent_exp(ad2, 0.5 * f_ham.g) * out * nilpotent_exp(ad2, -0.5 * f_ham.g);

    out *= std::exp(0.5 * rate_gap * f_ham.t);
    return out;
}

}  // namespace lindsq
