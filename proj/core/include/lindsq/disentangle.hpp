#pragma once

#include "lindsq/model.hpp"
#include "lindsq/numkit.hpp"
#include "lindsq/superop.hpp"

namespace lindsq {

/// Coefficients of the su(1,1) factorization
///   exp(t (2a K3 + b K+ + c K-)) = exp(G K+) exp(-2 log F K3) exp(E K-).
/// log_f is log F made continuous in t along [0, t] (the phase of F can wind).
struct DisentangledFactors {
    complexd g{0.0, 0.0};
    complexd f{1.0, 0.0};
    complexd e{0.0, 0.0};
    complexd log_f{0.0, 0.0};
    double t = 0.0;
};

/// Generic factorization coefficients. With w = sqrt(a^2 - b c):
///   F = cosh(t w) - (a/w) sinh(t w),  G = (b/w) sinh(t w)/F,  E = (c/w) sinh(t w)/F.
/// For |a^2 - bc| < 1e-14 the analytic limit G = b t/(1-a t), F = 1-a t,
/// E = c t/(1-a t) is used. Throws singular_error when |F| falls below 1e-12
/// anywhere on the tracked path.
DisentangledFactors su11_factors(complexd a, complexd b, complexd c, double t);

/// Hamiltonian-part specialization: w = i omega, so
///   F = cos(t w) + i (c^2+s^2) sin(t w), G/E = 2 i e^{+-i phi} c s sin(t w)/F.
DisentangledFactors hamiltonian_factors(const ModelParams& p, const SqueezeSolution& s, double t);

/// Dissipative-part specialization via the generic formula with
/// a = -(mu'+nu')/2, b = nu', c = mu'; the internal square root equals
/// (mu'-nu')/2 = (mu-nu)/2 and is asserted.
DisentangledFactors dissipative_factors(const TransformedCoeffs& tc, double t);

/// exp(G K+) exp(-2 log F K3) exp(E K-) as one superoperator.
SuperOp factored_superop(const DisentangledFactors& f, const GeneratorSet& gen);

/// Operator-level form of the factored propagator applied to a state:
/// nested conjugations by exp((G/2)(a+)^2), F^{-N}, exp((E/2) a^2) around the
/// dissipative double sum, including the exp((mu-nu) t / 2) prefactor.
/// The sums terminate at the Fock cutoff. The result is not renormalized.
CMatrix operator_level_apply(const DisentangledFactors& f_ham, const DisentangledFactors& f_dis,
                             double rate_gap, const CMatrix& rho0, double theta = 0.0);

}  // namespace lindsq
