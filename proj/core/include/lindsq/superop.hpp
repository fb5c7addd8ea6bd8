#pragma once

#include <cstddef>

#include "lindsq/model.hpp"
#include "lindsq/numkit.hpp"

namespace lindsq {

/// Row-major vectorization: X -> (x11, x12, ..., x1d; x21, ...) as a d^2 x 1
/// column. Under it, A X B maps to kron(A, B^T) vec(X).
CMatrix vec(const CMatrix& x);
CMatrix unvec(const CMatrix& v, std::size_t dim);

/// d^2 x d^2 matrix acting on vectorized density matrices.
struct SuperOp {
    std::size_t dim = 0;  ///< underlying Fock truncation d
    CMatrix mat;          ///< d^2 x d^2
};

/// rho -> A rho B as a superoperator.
SuperOp sandwich_mul(const CMatrix& a, const CMatrix& b);
/// rho -> A rho.
SuperOp left_mul(const CMatrix& a);
/// rho -> rho B.
SuperOp right_mul(const CMatrix& b);

/// su(1,1) superoperator triple.
struct GeneratorSet {
    SuperOp k3, kp, km;
};

/// K3 = (N x 1 - 1 x N)/2, K+ = ((a+)^2 x 1 - 1 x ((a+)^2)^T)/2,
/// K- = (a^2 x 1 - 1 x (a^2)^T)/2, from truncated operators.
GeneratorSet k_generators(std::size_t dim, double theta = 0.0);

/// Kt3 = (N x 1 + 1 x N + 1 x 1)/2, Kt+ = a+ x a^T, Kt- = a x (a+)^T.
GeneratorSet ktilde_generators(std::size_t dim, double theta = 0.0);

/// Liouvillian of the original generalized master equation, built literally
/// from the truncated operators (trace-preserving exactly, by cyclicity).
SuperOp liouvillian_original(const ModelParams& p, std::size_t dim, double theta = 0.0);

/// Transformed-frame generator split into its commuting-frame parts:
///   hamiltonian  = -2 i w (c^2+s^2) K3 + 2 i w e^{i phi} c s K+ + 2 i w e^{-i phi} c s K-
///   dissipative  = -((mu+nu)(c^2+s^2) - 4 k c s) Kt3 + nu' Kt+ + mu' Kt-
///   full         = ((mu-nu)/2) I + hamiltonian + dissipative
struct TransformedLiouvillian {
    SuperOp full;         ///< L_S
    SuperOp hamiltonian;  ///< the K part
    SuperOp dissipative;  ///< the Kt part
};

TransformedLiouvillian liouvillian_transformed(const ModelParams& p, const SqueezeSolution& s,
                                               const TransformedCoeffs& tc, std::size_t dim,
                                               double theta = 0.0);

/// Projector onto basis pairs (m, n) with m, n < d_int, as a superoperator.
SuperOp pair_projector(std::size_t dim, std::size_t d_int);

/// Row vector vec(I)^dagger * M, returned as a 1 x d^2 matrix; its entries
/// measure how M fails to preserve the trace.
CMatrix trace_row(const SuperOp& m);

}  // namespace lindsq
