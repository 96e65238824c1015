#include "qkt/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qkt {

namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kHermitianTolerance = 1e-12;

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// sqrt(j(j+1) - m(m+1)) for the raising step out of basis index k (k >= 1).
double raising_coefficient(SpinQuantum spin, std::size_t k) {
  const double j = spin.j();
  const double m = spin.m_of(k);
  return std::sqrt(j * (j + 1.0) - m * (m + 1.0));
}

void require_same_spin(SpinQuantum a, SpinQuantum b, const char* where) {
  if (!(a == b)) throw std::invalid_argument(std::string(where) + ": spin mismatch");
}

}  // namespace

SpinQuantum SpinQuantum::from_particles(int particles) {
  if (particles < 1) throw std::invalid_argument("SpinQuantum: particle count must be >= 1");
  return SpinQuantum(particles);
}

StateVector::StateVector(SpinQuantum spin, CVector amplitudes)
    : spin_(spin), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != spin_.dim())
    throw std::invalid_argument("StateVector: amplitude count must equal 2j+1");
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance)
    throw std::invalid_argument("StateVector: amplitudes are not normalized");
}

StateVector StateVector::normalized(SpinQuantum spin, CVector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("StateVector: zero or non-finite amplitudes");
  amplitudes /= n;
  return StateVector(spin, std::move(amplitudes));
}

StateVector StateVector::basis(SpinQuantum spin, std::size_t index) {
  if (index >= spin.dim()) throw std::out_of_range("StateVector::basis: index outside 0..2j");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(spin.dim()));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(spin, std::move(v));
}

Operator::Operator(SpinQuantum spin, CMatrix entries, bool hermitian)
    : spin_(spin), entries_(std::move(entries)), hermitian_(hermitian) {
  const auto d = static_cast<Eigen::Index>(spin_.dim());
  if (entries_.rows() != d || entries_.cols() != d)
    throw std::invalid_argument("Operator: matrix must be (2j+1)x(2j+1)");
  if (hermitian_ && max_abs(entries_ - entries_.adjoint()) > kHermitianTolerance)
    throw std::invalid_argument("Operator: tagged hermitian but entries are not");
}

Operator Operator::adjoint() const { return Operator(spin_, entries_.adjoint(), hermitian_); }

Operator operator*(const Operator& a, const Operator& b) {
  require_same_spin(a.spin_, b.spin_, "Operator product");
  return Operator(a.spin_, a.entries_ * b.entries_);
}

StateVector operator*(const Operator& op, const StateVector& state) {
  require_same_spin(op.spin(), state.spin(), "Operator application");
  return StateVector::normalized(state.spin(), op.entries() * state.amplitudes());
}

StateVector apply_unitary(const Operator& unitary, const StateVector& state) {
  require_same_spin(unitary.spin(), state.spin(), "apply_unitary");
  return StateVector(state.spin(), unitary.entries() * state.amplitudes(), StateVector::Unchecked{});
}

Operator jz_operator(SpinQuantum spin) {
  const auto d = static_cast<Eigen::Index>(spin.dim());
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) m(k, k) = spin.m_of(static_cast<std::size_t>(k));
  return Operator(spin, std::move(m), true);
}

LadderOperators ladder_operators(SpinQuantum spin) {
  const auto d = static_cast<Eigen::Index>(spin.dim());
  CMatrix plus = CMatrix::Zero(d, d);
  for (Eigen::Index k = 1; k < d; ++k) plus(k - 1, k) = raising_coefficient(spin, static_cast<std::size_t>(k));
  CMatrix minus = plus.adjoint();
  return {Operator(spin, std::move(plus)), Operator(spin, std::move(minus))};
}

Operator jx_operator(SpinQuantum spin) {
  const auto [plus, minus] = ladder_operators(spin);
  return Operator(spin, 0.5 * (plus.entries() + minus.entries()), true);
}

Operator jy_operator(SpinQuantum spin) {
  const auto [plus, minus] = ladder_operators(spin);
  return Operator(spin, (plus.entries() - minus.entries()) / Complex(0.0, 2.0), true);
}

Operator hermitian_exponential(const Operator& generator, double scale) {
  if (!generator.hermitian()) throw std::invalid_argument("hermitian_exponential: generator is not tagged hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(generator.entries());
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_exponential: eigensolver failed");
  const Eigen::VectorXd& w = solver.eigenvalues();
  const CMatrix& v = solver.eigenvectors();
  CVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) phases(i) = std::polar(1.0, scale * w(i));
  return Operator(generator.spin(), v * phases.asDiagonal() * v.adjoint());
}

Operator rotation_operator(SpinQuantum spin, double theta, double phi) {
  const CMatrix generator = jx_operator(spin).entries() * std::sin(phi) - jy_operator(spin).entries() * std::cos(phi);
  return hermitian_exponential(Operator(spin, generator, true), theta);
}

StateVector coherent_spin_state(SpinQuantum spin, double theta, double phi) {
  const Operator r = rotation_operator(spin, theta, phi);
  return StateVector::normalized(spin, r.entries().col(0));
}

CVector apply_collective(SpinQuantum spin, int axis, const CVector& amplitudes) {
  const auto d = static_cast<Eigen::Index>(spin.dim());
  if (amplitudes.size() != d) throw std::invalid_argument("apply_collective: length must equal 2j+1");
  CVector out = CVector::Zero(d);
  if (axis == 2) {
    for (Eigen::Index k = 0; k < d; ++k) out(k) = spin.m_of(static_cast<std::size_t>(k)) * amplitudes(k);
    return out;
  }
  if (axis != 0 && axis != 1) throw std::invalid_argument("apply_collective: axis must be 0, 1 or 2");
  // J_x = (J+ + J-)/2, J_y = (J+ - J-)/(2i); J+ moves index k to k-1.
  const Complex up_weight = axis == 0 ? Complex(0.5, 0.0) : Complex(0.0, -0.5);
  const Complex down_weight = axis == 0 ? Complex(0.5, 0.0) : Complex(0.0, 0.5);
  for (Eigen::Index k = 1; k < d; ++k) {
    const double c = raising_coefficient(spin, static_cast<std::size_t>(k));
    out(k - 1) += up_weight * c * amplitudes(k);
    out(k) += down_weight * c * amplitudes(k - 1);
  }
  return out;
}

Moments moments(const StateVector& state) {
  const CVector& psi = state.amplitudes();
  const CVector applied[3] = {apply_collective(state.spin(), 0, psi), apply_collective(state.spin(), 1, psi),
                              apply_collective(state.spin(), 2, psi)};
  Moments out;
  for (int a = 0; a < 3; ++a) {
    out.first(a) = psi.dot(applied[a]).real();
    for (int b = a; b < 3; ++b) {
      // Re<J_a psi|J_b psi> = (1/2)<{J_a, J_b}> for hermitian J_a, J_b.
      const double s = applied[a].dot(applied[b]).real();
      out.second(a, b) = s;
      out.second(b, a) = s;
    }
  }
  out.jsq = out.second.trace();
  return out;
}

}  // namespace qkt
