#pragma once

// Spin-squeezing witnesses computed from collective moments.

#include <optional>

#include "qkt/spin_algebra.hpp"

namespace qkt {

/// Gamma = (N-1) gamma + C, where C is the symmetrized second-moment matrix and
/// gamma the covariance matrix. Positive semidefinite for physical moments.
struct GammaMatrix {
  Mat3 entries;
  int particles;
};

/// Gamma_ab = N second_ab - (N-1) first_a first_b. Requires N >= 2.
GammaMatrix gamma_matrix(const Moments& m, int particles);

/// Mean-spin direction n = (sin t0 cos p0, sin t0 sin p0, cos t0) and the two
/// perpendicular axes n1 = (-cos t0 cos p0, -cos t0 sin p0, sin t0),
/// n2 = (-sin p0, cos p0, 0).
struct MeanSpinFrame {
  double theta0;
  double phi0;
  Vec3 n;
  Vec3 n1;
  Vec3 n2;
};

/// Mean spin shorter than this is treated as vanishing.
inline constexpr double kMeanSpinThreshold = 1e-12;

bool has_mean_spin(const Moments& m);

/// theta0 = acos(<J_z>/|J|); phi0 = acos(<J_x>/(|J| sin t0)) if <J_y> > 0, else
/// 2 pi minus that. phi0 = 0 when sin t0 = 0. Throws std::domain_error when the
/// mean spin vanishes.
MeanSpinFrame mean_spin_frame(const Moments& m);

struct TothResult {
  double value;
  /// Unit eigenvector of lambda_min; largest-|component| positive, ties to the earlier axis.
  Vec3 min_direction;
  /// lambda_min has multiplicity > 1 (within 1e-10); min_direction is then solver-chosen.
  bool degenerate;
  double lambda_min;
};

/// lambda_min(Gamma) / (<J^2> - N/2). Throws std::domain_error if the denominator is not positive.
TothResult toth_squeezing(const Moments& m, int particles);

/// Minimal eigenvalue of (4/N) [<J_a J_b>_sym] over the frame axes n1, n2.
double kitagawa_ueda_squeezing(const Moments& m, int particles);

/// Closed form (2/N)[<J1^2 + J2^2> - sqrt(<J1^2 - J2^2>^2 + <[J1, J2]_+>^2)],
/// kept as an independent route for cross-checks.
double kitagawa_ueda_closed_form(const Moments& m, int particles);

/// (4/N^2)[N (Delta J_n)^2 + <J_n>^2] along the instantaneous mean-spin direction.
double mean_spin_squeezing(const Moments& m, int particles);

/// Two-qubit correlation matrix 4 Gamma / (N^2 (N-1)) - I/(N-1).
Mat3 pairwise_correlation_matrix(const Moments& m, int particles);
/// n^T (pairwise correlation matrix) n for a unit direction n.
double pairwise_correlation(const Moments& m, int particles, const Vec3& direction);

/// Minimal pairwise correlation (xi_T^2 - 1)/(N - 1). Only valid in the
/// symmetric subspace; throws std::domain_error when <J^2> != N/2 (N/2 + 1) within 1e-8.
double min_pairwise_correlation(const Moments& m, int particles);

/// True when <J^2> = N/2 (N/2 + 1) within 1e-8.
bool in_symmetric_subspace(const Moments& m, int particles);

struct SqueezingReport {
  double xi_t2;
  std::optional<double> xi_ku2;
  std::optional<double> xi_n2;
  double c_min;
  Vec3 min_direction;
  bool degenerate;
  std::optional<MeanSpinFrame> frame;
};

/// All witnesses for a symmetric-subspace state; frame-based entries are empty
/// when the mean spin vanishes.
SqueezingReport squeezing_report(const Moments& m, int particles);

}  // namespace qkt
