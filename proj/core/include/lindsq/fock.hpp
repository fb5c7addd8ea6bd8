#pragma once

#include <cstddef>

#include "lindsq/numkit.hpp"

namespace lindsq {

/// Annihilation operator on d Fock levels: entry (n, n+1) = e^{i theta} sqrt(n+1).
CMatrix annihilation_op(std::size_t dim, double theta = 0.0);

/// Conjugate transpose of annihilation_op.
CMatrix creation_op(std::size_t dim, double theta = 0.0);

/// Number operator diag(0, 1, ..., d-1); equals a^dagger a exactly.
CMatrix number_op(std::size_t dim);

/// Squeezing operator exp((eps (a^dag)^2 - conj(eps) a^2) / 2) on the
/// truncated space. The generator stays anti-Hermitian under truncation, so
/// the result is unitary to expm accuracy.
CMatrix squeeze_op(std::size_t dim, complexd eps, double theta = 0.0);

/// Density matrix on d Fock levels (Hermitian, unit trace, positive).
struct DensityMatrix {
    std::size_t dim = 0;
    CMatrix mat;
};

DensityMatrix fock_state(std::size_t n, std::size_t dim);
DensityMatrix coherent_state(complexd alpha, std::size_t dim, double theta = 0.0);
DensityMatrix thermal_state(double nbar, std::size_t dim);

/// Projector onto levels < d_int (diagonal 0/1 matrix of size dim).
CMatrix level_projector(std::size_t dim, std::size_t d_int);

}  // namespace lindsq
