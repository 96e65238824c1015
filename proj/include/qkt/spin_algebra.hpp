#pragma once

// Collective angular-momentum algebra in the symmetric Dicke subspace.
//
// Basis convention: index k <-> |j, m = j - k>, so index 0 is the maximal
// J_z state and J_z is diagonal with descending entries. Units with hbar = 1.

#include <complex>
#include <cstddef>
#include <utility>

#include <Eigen/Dense>

namespace qkt {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Spin magnitude j of N spin-1/2 particles, stored as the integer 2j = N.
class SpinQuantum {
 public:
  static SpinQuantum from_particles(int particles);

  int particles() const { return twice_j_; }
  double j() const { return 0.5 * twice_j_; }
  /// Hilbert-space dimension 2j+1.
  std::size_t dim() const { return static_cast<std::size_t>(twice_j_) + 1; }
  /// Magnetic quantum number of basis index k.
  double m_of(std::size_t index) const { return j() - static_cast<double>(index); }

  friend bool operator==(SpinQuantum, SpinQuantum) = default;

 private:
  explicit SpinQuantum(int twice_j) : twice_j_(twice_j) {}
  int twice_j_;
};

class Operator;

/// Normalized pure state over the Dicke basis.
class StateVector {
 public:
  /// Validates length and unit norm (within 1e-12).
  StateVector(SpinQuantum spin, CVector amplitudes);
  /// Rescales arbitrary nonzero amplitudes to unit norm.
  static StateVector normalized(SpinQuantum spin, CVector amplitudes);
  /// The basis vector |j, m = j - index>.
  static StateVector basis(SpinQuantum spin, std::size_t index);

  SpinQuantum spin() const { return spin_; }
  const CVector& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  struct Unchecked {};
  StateVector(SpinQuantum spin, CVector amplitudes, Unchecked)
      : spin_(spin), amplitudes_(std::move(amplitudes)) {}
  friend StateVector apply_unitary(const Operator&, const StateVector&);

  SpinQuantum spin_;
  CVector amplitudes_;
};

/// Dense (2j+1)x(2j+1) operator. The hermitian tag is verified on construction.
class Operator {
 public:
  Operator(SpinQuantum spin, CMatrix entries, bool hermitian = false);

  SpinQuantum spin() const { return spin_; }
  const CMatrix& entries() const { return entries_; }
  bool hermitian() const { return hermitian_; }

  Operator adjoint() const;
  friend Operator operator*(const Operator& a, const Operator& b);
  friend StateVector operator*(const Operator& op, const StateVector& state);

 private:
  SpinQuantum spin_;
  CMatrix entries_;
  bool hermitian_;
};

/// Applies an operator known to be unitary; skips the norm re-validation so
/// round-off drift over long trajectories stays observable instead of throwing.
StateVector apply_unitary(const Operator& unitary, const StateVector& state);

struct LadderOperators {
  Operator raising;
  Operator lowering;
};

Operator jz_operator(SpinQuantum spin);
/// (J_+, J_-) with <j,m+1|J_+|j,m> = sqrt(j(j+1) - m(m+1)).
LadderOperators ladder_operators(SpinQuantum spin);
Operator jx_operator(SpinQuantum spin);
Operator jy_operator(SpinQuantum spin);

/// exp(i * scale * H) by spectral decomposition; H must carry the hermitian tag.
Operator hermitian_exponential(const Operator& generator, double scale);

/// R(theta, phi) = exp{i theta [J_x sin(phi) - J_y cos(phi)]}.
Operator rotation_operator(SpinQuantum spin, double theta, double phi);

/// |theta, phi> = R(theta, phi)|j, j>; mean spin j(sin t cos p, sin t sin p, cos t).
StateVector coherent_spin_state(SpinQuantum spin, double theta, double phi);

/// First moments, symmetrized second moments, and <J^2> of a state.
struct Moments {
  Vec3 first = Vec3::Zero();
  Mat3 second = Mat3::Zero();
  double jsq = 0.0;
};

Moments moments(const StateVector& state);

/// Applies J_x, J_y, J_z (axis 0, 1, 2) to an amplitude vector in O(d).
CVector apply_collective(SpinQuantum spin, int axis, const CVector& amplitudes);

}  // namespace qkt
