#pragma once

// Two-qubit reduced state of an exchange-symmetric ensemble and its concurrence.

#include <Eigen/Dense>

#include "qkt/spin_algebra.hpp"

namespace qkt {

using Mat4c = Eigen::Matrix4cd;

/// Reduced density matrix of a qubit pair in the product basis
/// |uu>, |ud>, |du>, |dd> (u = J_z eigenvalue +1/2).
class TwoQubitDensity {
 public:
  /// Validates hermiticity and unit trace (1e-10) and eigenvalues >= -1e-9.
  explicit TwoQubitDensity(const Mat4c& entries);

  const Mat4c& entries() const { return entries_; }
  /// Invariant under exchange of the two qubits within `tolerance`.
  bool is_swap_symmetric(double tolerance = 1e-10) const;
  /// Eigenvalues in ascending order.
  Eigen::Vector4d eigenvalues() const;

 private:
  Mat4c entries_;
};

/// Pauli-expansion reconstruction
///   rho = 1/4 [I + sum_a s_a (sigma_a x I + I x sigma_a) + sum_ab T_ab sigma_a x sigma_b]
/// with s_a = 2<J_a>/N, T_aa = (4 <J_a^2> - N)/(N(N-1)), T_ab = 4 <J_a J_b>_sym/(N(N-1)).
/// Requires N >= 2 and symmetric-subspace moments; throws std::domain_error if
/// the result has an eigenvalue below -1e-9.
TwoQubitDensity rho12_from_moments(const Moments& m, int particles);

struct ConcurrenceReport {
  double concurrence;
  /// lambda_1 - lambda_2 - lambda_3 - lambda_4 without the max(0, .) clip.
  double c1;
  /// 1 - (N-1) c1.
  double xi_c2;
  /// Descending.
  Eigen::Vector4d lambdas;
};

/// Wootters concurrence. The lambdas are the square roots of the eigenvalues of
/// rho (sy x sy) rho* (sy x sy), obtained as singular values of W^T (sy x sy) W
/// for rho = W W^dagger; the product matrix itself is diagonalized only to
/// reject inputs whose spectrum has imaginary parts above 1e-8.
ConcurrenceReport concurrence(const TwoQubitDensity& rho, int particles);

}  // namespace qkt
