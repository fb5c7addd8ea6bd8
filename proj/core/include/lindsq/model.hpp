#pragma once

#include "lindsq/numkit.hpp"

namespace lindsq {

/// Physical rates of the generalized master equation.
/// Constraints: mu > nu >= 0 and mu*nu >= |kappa|^2.
struct ModelParams {
    double omega = 1.0;   ///< oscillator angular frequency
    double mu = 3.0;      ///< damping rate
    double nu = 1.0;      ///< excitation rate
    complexd kappa{1.0, 0.0};  ///< anomalous (two-photon) rate
};

/// Throws validation_error naming the violated inequality; returns params unchanged.
ModelParams validated(const ModelParams& p);

/// Squeezing magnitude/phase that removes the anomalous dissipator terms.
/// With kappa = k e^{-i phi}, t_h = tanh|eps| is the root of
/// k t^2 - (mu+nu) t + k = 0 lying in [0, 1).
struct SqueezeSolution {
    double phi = 0.0;      ///< phase, kappa = |kappa| e^{-i phi}
    double t_h = 0.0;      ///< tanh|eps|
    double abs_eps = 0.0;  ///< |eps|
    double c = 1.0;        ///< cosh|eps|
    double s = 0.0;        ///< sinh|eps|
};

SqueezeSolution solve_squeeze(const ModelParams& p);

/// Rates of the transformed (plain Lindblad) equation.
struct TransformedCoeffs {
    double mu_p = 0.0;  ///< mu c^2 + nu s^2 - 2 k c s
    double nu_p = 0.0;  ///< mu s^2 + nu c^2 - 2 k c s
};

/// Computes the transformed rates and re-checks that the residual anomalous
/// coefficients vanish at the supplied solution.
TransformedCoeffs transformed_coeffs(const ModelParams& p, const SqueezeSolution& s);

/// Residual of the off-diagonal cancellation condition at tanh value t:
/// -(mu+nu) c s + k (c^2 + s^2) evaluated with c, s built from t.
double squeeze_residual(const ModelParams& p, double t);

/// The four dissipator coefficients of the transformed equation before the
/// phase choice; entries: {coef_A, coef_B, coef_C, coef_D}. C and D vanish at
/// the squeeze solution.
struct RawCoeffs {
    complexd a, b, c, d;
};

RawCoeffs raw_transformed_coeffs(const ModelParams& p, const SqueezeSolution& s);

}  // namespace lindsq
