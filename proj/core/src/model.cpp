#include "lindsq/model.hpp"

#include <cmath>
#include <sstream>

#include "lindsq/errors.hpp"

namespace lindsq {

ModelParams validated(const ModelParams& p) {
    if (!(p.mu > p.nu && p.nu >= 0.0)) {
        std::ostringstream os;
        os << "mu > nu >= 0 violated (mu = " << p.mu << ", nu = " << p.nu << ")";
        throw validation_error(os.str());
    }
    const double k2 = std::norm(p.kappa);
    if (!(p.mu * p.nu >= k2)) {
        std::ostringstream os;
        os << "positivity violated: mu*nu >= |kappa|^2 required (mu*nu = " << p.mu * p.nu
           << ", |kappa|^2 = " << k2 << ")";
        throw validation_error(os.str());
    }
    return p;
}

SqueezeSolution solve_squeeze(const ModelParams& p_in) {
    const ModelParams p = validated(p_in);
    const double k = std::abs(p.kappa);
    SqueezeSolution sol;
    if (k == 0.0) return sol;  // no anomalous terms to remove

    sol.phi = -std::arg(p.kappa) + 0.0;  // +0.0 normalizes the sign of zero
    const double sum = p.mu + p.nu;
    double disc = sum * sum - 4.0 * k * k;
    if (disc < -1e-12 * sum * sum)
        throw numeric_error("solve_squeeze: negative discriminant for validated parameters");
    disc = std::max(disc, 0.0);
    // the two roots multiply to 1; form the large one first to avoid cancellation
    const double t_large = (sum + std::sqrt(disc)) / (2.0 * k);
    sol.t_h = 1.0 / t_large;
    sol.abs_eps = std::atanh(sol.t_h);
    sol.c = 1.0 / std::sqrt(1.0 - sol.t_h * sol.t_h);
    sol.s = sol.t_h * sol.c;

    const double residual = squeeze_residual(p, sol.t_h);
    if (std::abs(residual) > 1e-10 * sum)
        throw numeric_error("solve_squeeze: off-diagonal residual above tolerance");
    return sol;
}

double squeeze_residual(const ModelParams& p, double t) {
    const double k = std::abs(p.kappa);
    const double c = 1.0 / std::sqrt(1.0 - t * t);
    const double s = t * c;
    return -(p.mu + p.nu) * c * s + k * (c * c + s * s);
}

RawCoeffs raw_transformed_coeffs(const ModelParams& p, const SqueezeSolution& s) {
    const complexd eip = std::polar(1.0, s.phi);
    const complexd eim = std::conj(eip);
    const complexd kap = p.kappa;
    const complexd kbar = std::conj(kap);
    const double c = s.c, sn = s.s;
    RawCoeffs r;
    r.a = p.mu * c * c + p.nu * sn * sn - kap * eip * c * sn - kbar * eim * c * sn;
    r.b = p.mu * sn * sn + p.nu * c * c - kap * eip * c * sn - kbar * eim * c * sn;
    r.c = -(p.mu + p.nu) * eim * c * sn + kap * c * c + eim * eim * kbar * sn * sn;
    r.d = -(p.mu + p.nu) * eip * c * sn + kbar * c * c + eip * eip * kap * sn * sn;
    return r;
}

TransformedCoeffs transformed_coeffs(const ModelParams& p_in, const SqueezeSolution& s) {
    const ModelParams p = validated(p_in);
    const double k = std::abs(p.kappa);
    TransformedCoeffs tc;
    tc.mu_p = p.mu * s.c * s.c + p.nu * s.s * s.s - 2.0 * k * s.c * s.s;
    tc.nu_p = p.mu * s.s * s.s + p.nu * s.c * s.c - 2.0 * k * s.c * s.s;

    const RawCoeffs raw = raw_transformed_coeffs(p, s);
    const double tol = 1e-10 * (p.mu + p.nu);
    if (std::abs(raw.c) > tol || std::abs(raw.d) > tol)
        throw numeric_error(
            "transformed_coeffs: residual anomalous coefficients nonzero; "
            "squeeze solution inconsistent with parameters");
    return tc;
}

}  // namespace lindsq
