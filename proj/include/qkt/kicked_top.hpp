#pragma once

// Quantum kicked top H = (kappa / 2j tau) J_z^2 + p J_y sum_n delta(t - n tau)
// and its classical limit on the unit sphere. tau is fixed to 1.

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qkt/spin_algebra.hpp"

namespace qkt {

struct KickedTopParams {
  SpinQuantum spin;
  double kappa = 3.0;
  double kick = std::numbers::pi / 2.0;
  static constexpr double period = 1.0;

  /// Throws std::invalid_argument for non-finite kappa or kick.
  void validate() const;
};

/// exp(-i (kappa/2j) J_z^2): diagonal phases exp(-i (kappa/2j) m^2).
Operator twist_operator(const KickedTopParams& params);
/// exp(-i p J_y).
Operator kick_operator(const KickedTopParams& params);
/// U = twist * kick; one application of U is one kick.
Operator floquet_operator(const KickedTopParams& params);

/// Element n is U^n applied to the initial state; length kicks + 1.
std::vector<StateVector> evolve(const StateVector& initial, const KickedTopParams& params, int kicks);
/// Same, reusing a precomputed Floquet operator.
std::vector<StateVector> evolve(const StateVector& initial, const Operator& floquet, int kicks);

/// Point (X, Y, Z) = <J>/j on the unit sphere.
class ClassicalPoint {
 public:
  /// Validates unit norm within 1e-12.
  ClassicalPoint(double x, double y, double z);
  static ClassicalPoint from_angles(double theta, double phi);

  double x() const { return r_(0); }
  double y() const { return r_(1); }
  double z() const { return r_(2); }
  const Vec3& vector() const { return r_; }

  /// theta = acos(Z) in [0, pi]; phi = atan2(Y, X) in (-pi, pi].
  double theta() const;
  double phi() const;

 private:
  struct Unchecked {};
  ClassicalPoint(const Vec3& r, Unchecked) : r_(r) {}
  friend ClassicalPoint classical_step(const ClassicalPoint&, double);

  Vec3 r_;
};

/// Great-circle distance between two points on the unit sphere.
double great_circle_distance(const ClassicalPoint& a, const ClassicalPoint& b);

/// Classical kicked-top map for p = pi/2:
/// (X, Y, Z) -> (Z cos kX + Y sin kX, -Z sin kX + Y cos kX, -X).
ClassicalPoint classical_step(const ClassicalPoint& point, double kappa);

std::vector<ClassicalPoint> classical_trajectory(const ClassicalPoint& start, double kappa, int kicks);

struct PhaseSpacePoint {
  int state_index;
  int kick;
  double theta;
  double phi;
  ClassicalPoint point;
};

/// Uniform-on-sphere initial points (uniform cos theta and phi, seeded), each
/// iterated `kicks` times. Ordered state-major, kick-minor; length n_states * (kicks + 1).
std::vector<PhaseSpacePoint> phase_space_map(double kappa, int n_states, int kicks, std::uint64_t seed);

/// Uniform [0, 1) doubles from the top 53 bits of std::mt19937_64. The engine's
/// sequence is fixed by the standard; std::uniform_real_distribution is not.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qkt
