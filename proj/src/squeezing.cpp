#include "qkt/squeezing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qkt {

namespace {

void require_pairs(int particles, const char* where) {
  if (particles < 2) throw std::invalid_argument(std::string(where) + ": requires N >= 2");
}

double symmetric_jsq(int particles) {
  const double half = 0.5 * particles;
  return half * (half + 1.0);
}

Vec3 canonical_sign(Vec3 v) {
  Eigen::Index lead = 0;
  for (Eigen::Index i = 1; i < 3; ++i)
    if (std::abs(v(i)) > std::abs(v(lead))) lead = i;
  if (v(lead) < 0.0) v = -v;
  return v;
}

}  // namespace

GammaMatrix gamma_matrix(const Moments& m, int particles) {
  require_pairs(particles, "gamma_matrix");
  const double n = particles;
  Mat3 g = n * m.second - (n - 1.0) * m.first * m.first.transpose();
  g = 0.5 * (g + g.transpose()).eval();
  return {g, particles};
}

bool has_mean_spin(const Moments& m) { return m.first.norm() > kMeanSpinThreshold; }

MeanSpinFrame mean_spin_frame(const Moments& m) {
  const double length = m.first.norm();
  if (!(length > kMeanSpinThreshold)) throw std::domain_error("mean_spin_frame: mean spin vanishes");
  const double theta0 = std::acos(std::clamp(m.first(2) / length, -1.0, 1.0));
  const double sin_t = std::sin(theta0);
  double phi0 = 0.0;
  if (sin_t != 0.0) {
    const double base = std::acos(std::clamp(m.first(0) / (length * sin_t), -1.0, 1.0));
    phi0 = m.first(1) > 0.0 ? base : 2.0 * std::numbers::pi - base;
  }
  const double cos_t = std::cos(theta0);
  const double cos_p = std::cos(phi0);
  const double sin_p = std::sin(phi0);
  return {theta0, phi0, m.first / length, Vec3(-cos_t * cos_p, -cos_t * sin_p, sin_t), Vec3(-sin_p, cos_p, 0.0)};
}

TothResult toth_squeezing(const Moments& m, int particles) {
  const GammaMatrix gamma = gamma_matrix(m, particles);
  const double denominator = m.jsq - 0.5 * particles;
  if (!(denominator > 1e-12)) throw std::domain_error("toth_squeezing: <J^2> - N/2 must be positive");
  Eigen::SelfAdjointEigenSolver<Mat3> solver(gamma.entries);
  const Eigen::Vector3d& w = solver.eigenvalues();
  return {w(0) / denominator, canonical_sign(solver.eigenvectors().col(0)), w(1) - w(0) < 1e-10, w(0)};
}

double kitagawa_ueda_squeezing(const Moments& m, int particles) {
  require_pairs(particles, "kitagawa_ueda_squeezing");
  const MeanSpinFrame frame = mean_spin_frame(m);
  const Vec3* axes[2] = {&frame.n1, &frame.n2};
  Eigen::Matrix2d reduced;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) reduced(a, b) = 4.0 / particles * axes[a]->dot(m.second * *axes[b]);
  reduced(0, 1) = reduced(1, 0) = 0.5 * (reduced(0, 1) + reduced(1, 0));
  return Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(reduced, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

double kitagawa_ueda_closed_form(const Moments& m, int particles) {
  require_pairs(particles, "kitagawa_ueda_closed_form");
  const MeanSpinFrame frame = mean_spin_frame(m);
  const double j11 = frame.n1.dot(m.second * frame.n1);
  const double j22 = frame.n2.dot(m.second * frame.n2);
  const double anticommutator = 2.0 * frame.n1.dot(m.second * frame.n2);
  return 2.0 / particles * (j11 + j22 - std::hypot(j11 - j22, anticommutator));
}

double mean_spin_squeezing(const Moments& m, int particles) {
  require_pairs(particles, "mean_spin_squeezing");
  const MeanSpinFrame frame = mean_spin_frame(m);
  const double n = particles;
  const double mean = frame.n.dot(m.first);
  const double variance = frame.n.dot(m.second * frame.n) - mean * mean;
  return 4.0 / (n * n) * (n * variance + mean * mean);
}

Mat3 pairwise_correlation_matrix(const Moments& m, int particles) {
  const GammaMatrix gamma = gamma_matrix(m, particles);
  const double n = particles;
  return 4.0 * gamma.entries / (n * n * (n - 1.0)) - Mat3::Identity() / (n - 1.0);
}

double pairwise_correlation(const Moments& m, int particles, const Vec3& direction) {
  return direction.dot(pairwise_correlation_matrix(m, particles) * direction);
}

bool in_symmetric_subspace(const Moments& m, int particles) {
  return std::abs(m.jsq - symmetric_jsq(particles)) <= 1e-8;
}

double min_pairwise_correlation(const Moments& m, int particles) {
  require_pairs(particles, "min_pairwise_correlation");
  if (!in_symmetric_subspace(m, particles))
    throw std::domain_error("min_pairwise_correlation: state is outside the symmetric subspace");
  return (toth_squeezing(m, particles).value - 1.0) / (particles - 1.0);
}

SqueezingReport squeezing_report(const Moments& m, int particles) {
  const TothResult toth = toth_squeezing(m, particles);
  SqueezingReport report{toth.value, std::nullopt, std::nullopt, min_pairwise_correlation(m, particles),
                         toth.min_direction, toth.degenerate, std::nullopt};
  if (has_mean_spin(m)) {
    report.frame = mean_spin_frame(m);
    report.xi_ku2 = kitagawa_ueda_squeezing(m, particles);
    report.xi_n2 = mean_spin_squeezing(m, particles);
  }
  return report;
}

}  // namespace qkt
