#include "qkt/full_space.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qkt::full_space {

namespace {

std::size_t states_of(int particles) { return std::size_t{1} << particles; }

void require_size(const CVector& full, int particles, const char* where) {
  if (particles < 1 || particles > kMaxEmbedParticles)
    throw std::invalid_argument(std::string(where) + ": particle count outside 1..12");
  if (static_cast<std::size_t>(full.size()) != states_of(particles))
    throw std::invalid_argument(std::string(where) + ": vector length must be 2^N");
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

CVector symmetric_embed(const StateVector& state) {
  const int n = state.spin().particles();
  if (n > kMaxEmbedParticles) throw std::invalid_argument("symmetric_embed: N above 12");
  CVector full = CVector::Zero(static_cast<Eigen::Index>(states_of(n)));
  const CVector& a = state.amplitudes();
  for (std::size_t idx = 0; idx < states_of(n); ++idx) {
    // Dicke index k counts spins down, i.e. set bits.
    const int k = std::popcount(idx);
    full(static_cast<Eigen::Index>(idx)) = a(k) / std::sqrt(binomial(n, k));
  }
  return full;
}

TwoQubitDensity partial_trace_pair(const CVector& full, int particles) {
  require_size(full, particles, "partial_trace_pair");
  if (particles < 2) throw std::invalid_argument("partial_trace_pair: requires N >= 2");
  const auto rest = static_cast<Eigen::Index>(states_of(particles - 2));
  // Row = 2 a + b over the two leading qubits, column = remaining qubits.
  CMatrix blocks(4, rest);
  for (Eigen::Index row = 0; row < 4; ++row)
    for (Eigen::Index col = 0; col < rest; ++col) blocks(row, col) = full(row * rest + col);
  const Mat4c rho = blocks * blocks.adjoint();
  return TwoQubitDensity(rho);
}

CVector apply_pauli(const CVector& full, int particles, int qubit, int axis) {
  require_size(full, particles, "apply_pauli");
  if (qubit < 0 || qubit >= particles) throw std::out_of_range("apply_pauli: qubit index");
  const std::size_t mask = std::size_t{1} << (particles - 1 - qubit);
  CVector out(full.size());
  for (std::size_t idx = 0; idx < states_of(particles); ++idx) {
    const bool down = (idx & mask) != 0;
    const auto i = static_cast<Eigen::Index>(idx);
    switch (axis) {
      case 0: out(static_cast<Eigen::Index>(idx ^ mask)) = full(i); break;
      // sigma_y |u> = i |d>, sigma_y |d> = -i |u>.
      case 1: out(static_cast<Eigen::Index>(idx ^ mask)) = (down ? Complex(0, -1) : Complex(0, 1)) * full(i); break;
      case 2: out(i) = (down ? -1.0 : 1.0) * full(i); break;
      default: throw std::invalid_argument("apply_pauli: axis must be 0, 1 or 2");
    }
  }
  return out;
}

Moments moments(const CVector& full, int particles) {
  require_size(full, particles, "full_space::moments");
  CVector applied[3];
  for (int a = 0; a < 3; ++a) {
    applied[a] = CVector::Zero(full.size());
    for (int q = 0; q < particles; ++q) applied[a] += 0.5 * apply_pauli(full, particles, q, a);
  }
  Moments out;
  for (int a = 0; a < 3; ++a) {
    out.first(a) = full.dot(applied[a]).real();
    for (int b = 0; b < 3; ++b) out.second(a, b) = applied[a].dot(applied[b]).real();
  }
  out.jsq = out.second.trace();
  return out;
}

Mat3 pair_correlation_matrix(const CVector& full, int particles) {
  require_size(full, particles, "pair_correlation_matrix");
  if (particles < 2) throw std::invalid_argument("pair_correlation_matrix: requires N >= 2");
  Mat3 out;
  for (int a = 0; a < 3; ++a) {
    const CVector first = apply_pauli(full, particles, 0, a);
    const double mean_first = full.dot(first).real();
    for (int b = 0; b < 3; ++b) {
      const CVector second = apply_pauli(full, particles, 1, b);
      const double mean_second = full.dot(second).real();
      const double joint = full.dot(apply_pauli(second, particles, 0, a)).real();
      out(a, b) = joint - mean_first * mean_second;
    }
  }
  return out;
}

CMatrix collective_matrix(int particles, int axis) {
  if (particles < 1 || particles > kMaxOperatorParticles)
    throw std::invalid_argument("collective_matrix: particle count outside 1..8");
  const auto dim = static_cast<Eigen::Index>(states_of(particles));
  CMatrix out(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    CVector e = CVector::Zero(dim);
    e(col) = 1.0;
    CVector acc = CVector::Zero(dim);
    for (int q = 0; q < particles; ++q) acc += 0.5 * apply_pauli(e, particles, q, axis);
    out.col(col) = acc;
  }
  return out;
}

CMatrix floquet_matrix(const KickedTopParams& params) {
  params.validate();
  const int n = params.spin.particles();
  const CMatrix jz = collective_matrix(n, 2);
  const CMatrix jy = collective_matrix(n, 1);
  const double rate = params.kappa / (2.0 * params.spin.j());
  // J_z^2 is diagonal in the product basis.
  CMatrix twist = CMatrix::Zero(jz.rows(), jz.cols());
  for (Eigen::Index i = 0; i < jz.rows(); ++i) {
    const double mz = jz(i, i).real();
    twist(i, i) = std::polar(1.0, -rate * mz * mz);
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(jy);
  CVector phases(solver.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = std::polar(1.0, -params.kick * solver.eigenvalues()(i));
  const CMatrix kick = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
  return twist * kick;
}

}  // namespace qkt::full_space
