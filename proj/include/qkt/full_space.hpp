#pragma once

// Brute-force reference in the full 2^N tensor-product space, for small N.
//
// Qubit 0 is the most significant bit of the basis index; bit value 0 is the
// J_z = +1/2 state. Used to validate the Dicke-basis formulas.

#include "qkt/entanglement.hpp"
#include "qkt/kicked_top.hpp"

namespace qkt::full_space {

inline constexpr int kMaxEmbedParticles = 12;
inline constexpr int kMaxOperatorParticles = 8;

/// Maps |j, m> to the normalized symmetric sum of product states with j + m
/// spins up, extended linearly. Requires N = 2j <= 12.
CVector symmetric_embed(const StateVector& state);

/// Reduced state of qubits 0 and 1 for a normalized pure state of N >= 2 qubits.
TwoQubitDensity partial_trace_pair(const CVector& full, int particles);

/// sigma_axis on one qubit, applied to a full-space vector.
CVector apply_pauli(const CVector& full, int particles, int qubit, int axis);

/// Collective moments computed from sum_k sigma_k / 2 in the full space.
Moments moments(const CVector& full, int particles);

/// <sigma_0a sigma_1b> - <sigma_0a><sigma_1b>.
Mat3 pair_correlation_matrix(const CVector& full, int particles);

/// Dense J_axis = sum_k sigma_k,axis / 2 on 2^N states; N <= 8.
CMatrix collective_matrix(int particles, int axis);

/// exp(-i kappa/(2j) J_z^2) exp(-i p J_y) built from the full-space collective operators.
CMatrix floquet_matrix(const KickedTopParams& params);

}  // namespace qkt::full_space
