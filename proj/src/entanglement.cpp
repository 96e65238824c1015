#include "qkt/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qkt/squeezing.hpp"

namespace qkt {

namespace {

using Mat2c = Eigen::Matrix2cd;

Mat2c pauli(int axis) {
  Mat2c s;
  switch (axis) {
    case 0: s << 0, 1, 1, 0; break;
    case 1: s << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 2: s << 1, 0, 0, -1; break;
    default: s = Mat2c::Identity(); break;
  }
  return s;
}

Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

// Swaps the two qubits: |ab> -> |ba>.
Mat4c swap_matrix() {
  Mat4c p = Mat4c::Zero();
  p(0, 0) = p(3, 3) = 1.0;
  p(1, 2) = p(2, 1) = 1.0;
  return p;
}

Mat4c spin_flip() {
  const Mat2c sy = pauli(1);
  return kron(sy, sy);
}

constexpr double kRankCutoff = 1e-14;

}  // namespace

TwoQubitDensity::TwoQubitDensity(const Mat4c& entries) : entries_(entries) {
  if (!entries_.allFinite()) throw std::invalid_argument("TwoQubitDensity: non-finite entries");
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("TwoQubitDensity: not hermitian");
  if (std::abs(entries_.trace() - Complex(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("TwoQubitDensity: trace differs from 1");
  entries_ = 0.5 * (entries_ + entries_.adjoint()).eval();
  if (eigenvalues()(0) < -1e-9) throw std::invalid_argument("TwoQubitDensity: negative eigenvalue");
}

bool TwoQubitDensity::is_swap_symmetric(double tolerance) const {
  const Mat4c p = swap_matrix();
  return (p * entries_ * p - entries_).cwiseAbs().maxCoeff() <= tolerance;
}

Eigen::Vector4d TwoQubitDensity::eigenvalues() const {
  return Eigen::SelfAdjointEigenSolver<Mat4c>(entries_, Eigen::EigenvaluesOnly).eigenvalues();
}

TwoQubitDensity rho12_from_moments(const Moments& m, int particles) {
  if (particles < 2) throw std::invalid_argument("rho12_from_moments: requires N >= 2");
  if (!in_symmetric_subspace(m, particles))
    throw std::domain_error("rho12_from_moments: moments are outside the symmetric subspace");
  const double n = particles;
  const double pairs = n * (n - 1.0);
  const Mat2c id = Mat2c::Identity();
  Mat4c rho = Mat4c::Identity();
  for (int a = 0; a < 3; ++a) {
    const double s = 2.0 * m.first(a) / n;
    rho += s * (kron(pauli(a), id) + kron(id, pauli(a)));
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const double t = a == b ? (4.0 * m.second(a, a) - n) / pairs : 4.0 * m.second(a, b) / pairs;
      rho += t * kron(pauli(a), pauli(b));
    }
  }
  rho *= 0.25;
  const double lowest = Eigen::SelfAdjointEigenSolver<Mat4c>(rho, Eigen::EigenvaluesOnly).eigenvalues()(0);
  if (lowest < -1e-9) throw std::domain_error("rho12_from_moments: reconstructed state has a negative eigenvalue");
  return TwoQubitDensity(rho);
}

ConcurrenceReport concurrence(const TwoQubitDensity& rho, int particles) {
  if (particles < 2) throw std::invalid_argument("concurrence: requires N >= 2");
  const Mat4c& r = rho.entries();
  const Mat4c flip = spin_flip();

  const Mat4c product = r * flip * r.conjugate() * flip;
  const Eigen::Vector4cd spectrum = Eigen::ComplexEigenSolver<Mat4c>(product, false).eigenvalues();
  for (int i = 0; i < 4; ++i)
    if (std::abs(spectrum(i).imag()) > 1e-8)
      throw std::domain_error("concurrence: spin-flipped product has complex eigenvalues");

  Eigen::SelfAdjointEigenSolver<Mat4c> solver(r);
  // Eigenvalues at round-off level are exact zeros; their sqrt would leak ~1e-8 into the lambdas.
  const Eigen::Vector4d weights =
      solver.eigenvalues().unaryExpr([](double e) { return e < kRankCutoff ? 0.0 : std::sqrt(e); });
  const Mat4c w = solver.eigenvectors() * weights.asDiagonal();
  const Mat4c tau = w.transpose() * flip * w;
  Eigen::Vector4d lambdas = Eigen::JacobiSVD<Mat4c>(tau).singularValues();
  std::sort(lambdas.data(), lambdas.data() + 4, std::greater<>());

  const double c1 = lambdas(0) - lambdas(1) - lambdas(2) - lambdas(3);
  return {std::max(0.0, c1), c1, 1.0 - (particles - 1.0) * c1, lambdas};
}

}  // namespace qkt
