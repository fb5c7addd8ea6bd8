#pragma once

#include <span>
#include <string>
#include <vector>

#include "lindsq/disentangle.hpp"
#include "lindsq/fock.hpp"
#include "lindsq/model.hpp"
#include "lindsq/superop.hpp"

namespace lindsq {

enum class Method { exact, split, factorized, rk4 };

std::string method_name(Method m);

struct EvolutionResult {
    std::vector<double> times;
    std::vector<CMatrix> states;
    Method method = Method::exact;
};

/// rho(t) = unvec(expm(L t) vec(rho0)) on a sorted time grid.
EvolutionResult evolve_exact(const SuperOp& l, const DensityMatrix& rho0,
                             std::span<const double> times);

/// Classic fixed-step RK4 on v' = L v; independent oracle for the exact route.
/// Requires dt * ||L||_1 < 1; throws numeric_error if the solution norm grows
/// beyond 10 * exp(growth_rate * t) times its initial value.
EvolutionResult evolve_rk4(const SuperOp& l, const DensityMatrix& rho0,
                           std::span<const double> times, double dt, double growth_rate = 0.0);

/// First-approximation split propagator
/// e^{(mu-nu)t/2} expm(A t) expm(At t) vec(rho0), with A/At the transformed
/// generator parts.
EvolutionResult evolve_split(const ModelParams& p, const SqueezeSolution& s,
                             const TransformedCoeffs& tc, const DensityMatrix& rho0,
                             std::span<const double> times, double theta = 0.0);

enum class FactorizedRoute { superop, operator_level };

/// Same propagator as evolve_split, computed through the (G, F, E)
/// factorizations of both parts; the two routes are selectable.
EvolutionResult evolve_factorized(const ModelParams& p, const SqueezeSolution& s,
                                  const TransformedCoeffs& tc, const DensityMatrix& rho0,
                                  std::span<const double> times,
                                  FactorizedRoute route = FactorizedRoute::operator_level,
                                  double theta = 0.0);

/// Tr(O rho) for each operator.
std::vector<complexd> expectation_values(const CMatrix& rho, std::span<const CMatrix> ops);

struct CompareReport {
    double frobenius_error = 0.0;
    double trace_distance = 0.0;
    double trace_defect = 0.0;  ///< |Tr(a) - 1|
    double herm_defect = 0.0;   ///< of a
    double min_eig = 0.0;       ///< of hermitized a
};

/// Error metrics between two states plus defect diagnostics of the first.
CompareReport compare_states(const CMatrix& a, const CMatrix& b);

}  // namespace lindsq
