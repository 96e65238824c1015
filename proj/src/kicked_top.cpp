#include "qkt/kicked_top.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qkt {

void KickedTopParams::validate() const {
  if (!std::isfinite(kappa)) throw std::invalid_argument("KickedTopParams: kappa must be finite");
  if (!std::isfinite(kick)) throw std::invalid_argument("KickedTopParams: kick strength must be finite");
}

Operator twist_operator(const KickedTopParams& params) {
  params.validate();
  const SpinQuantum spin = params.spin;
  const auto d = static_cast<Eigen::Index>(spin.dim());
  const double rate = params.kappa / (2.0 * spin.j());
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const double mk = spin.m_of(static_cast<std::size_t>(k));
    m(k, k) = std::polar(1.0, -rate * mk * mk);
  }
  return Operator(spin, std::move(m));
}

Operator kick_operator(const KickedTopParams& params) {
  params.validate();
  return hermitian_exponential(jy_operator(params.spin), -params.kick);
}

Operator floquet_operator(const KickedTopParams& params) {
  return twist_operator(params) * kick_operator(params);
}

std::vector<StateVector> evolve(const StateVector& initial, const Operator& floquet, int kicks) {
  if (kicks < 0) throw std::invalid_argument("evolve: kicks must be >= 0");
  if (!(floquet.spin() == initial.spin())) throw std::invalid_argument("evolve: spin mismatch");
  std::vector<StateVector> out;
  out.reserve(static_cast<std::size_t>(kicks) + 1);
  out.push_back(initial);
  for (int n = 0; n < kicks; ++n) out.push_back(apply_unitary(floquet, out.back()));
  return out;
}

std::vector<StateVector> evolve(const StateVector& initial, const KickedTopParams& params, int kicks) {
  if (!(params.spin == initial.spin())) throw std::invalid_argument("evolve: spin mismatch");
  return evolve(initial, floquet_operator(params), kicks);
}

ClassicalPoint::ClassicalPoint(double x, double y, double z) : r_(x, y, z) {
  if (!r_.allFinite() || std::abs(r_.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("ClassicalPoint: (X, Y, Z) must lie on the unit sphere");
}

ClassicalPoint ClassicalPoint::from_angles(double theta, double phi) {
  const Vec3 r(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
  return ClassicalPoint(r.normalized(), Unchecked{});
}

double ClassicalPoint::theta() const { return std::acos(std::clamp(r_(2), -1.0, 1.0)); }

double ClassicalPoint::phi() const { return std::atan2(r_(1), r_(0)); }

double great_circle_distance(const ClassicalPoint& a, const ClassicalPoint& b) {
  // atan2 form stays accurate for nearly coincident points.
  return std::atan2(a.vector().cross(b.vector()).norm(), a.vector().dot(b.vector()));
}

ClassicalPoint classical_step(const ClassicalPoint& point, double kappa) {
  const double x = point.x();
  const double y = point.y();
  const double z = point.z();
  const double c = std::cos(kappa * x);
  const double s = std::sin(kappa * x);
  return ClassicalPoint(Vec3(z * c + y * s, -z * s + y * c, -x), ClassicalPoint::Unchecked{});
}

std::vector<ClassicalPoint> classical_trajectory(const ClassicalPoint& start, double kappa, int kicks) {
  if (kicks < 0) throw std::invalid_argument("classical_trajectory: kicks must be >= 0");
  std::vector<ClassicalPoint> out;
  out.reserve(static_cast<std::size_t>(kicks) + 1);
  out.push_back(start);
  for (int n = 0; n < kicks; ++n) out.push_back(classical_step(out.back(), kappa));
  return out;
}

std::vector<PhaseSpacePoint> phase_space_map(double kappa, int n_states, int kicks, std::uint64_t seed) {
  if (n_states < 1 || kicks < 1) throw std::invalid_argument("phase_space_map: n_states and kicks must be >= 1");
  UniformSource uniform(seed);
  std::vector<PhaseSpacePoint> out;
  out.reserve(static_cast<std::size_t>(n_states) * static_cast<std::size_t>(kicks + 1));
  for (int s = 0; s < n_states; ++s) {
    const double cos_theta = 2.0 * uniform.next() - 1.0;
    const double phi = 2.0 * std::numbers::pi * uniform.next();
    const auto trajectory = classical_trajectory(ClassicalPoint::from_angles(std::acos(cos_theta), phi), kappa, kicks);
    for (int n = 0; n <= kicks; ++n) {
      const ClassicalPoint& p = trajectory[static_cast<std::size_t>(n)];
      out.push_back({s, n, p.theta(), p.phi(), p});
    }
  }
  return out;
}

}  // namespace qkt
