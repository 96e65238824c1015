#include "qkt/witness.hpp"

namespace qkt {

WitnessRecord witness_record(const StateVector& state, int kick) {
  const int n = state.spin().particles();
  WitnessRecord r;
  r.kick = kick;
  r.moments = moments(state);
  r.norm = state.norm();

  const SqueezingReport sq = squeezing_report(r.moments, n);
  r.xi_t2 = sq.xi_t2;
  r.xi_ku2 = sq.xi_ku2;
  r.xi_n2 = sq.xi_n2;
  r.c_min = sq.c_min;
  r.min_direction = sq.min_direction;
  r.degenerate = sq.degenerate;
  r.frame = sq.frame;
  r.zeta2 = zeta_squared(sq.xi_t2);

  const ConcurrenceReport c = concurrence(rho12_from_moments(r.moments, n), n);
  r.concurrence = c.concurrence;
  r.c1 = c.c1;
  r.xi_c2 = c.xi_c2;
  return r;
}

std::vector<WitnessRecord> witness_series(std::span<const StateVector> trajectory) {
  std::vector<WitnessRecord> out;
  out.reserve(trajectory.size());
  for (std::size_t k = 0; k < trajectory.size(); ++k) out.push_back(witness_record(trajectory[k], static_cast<int>(k)));
  return out;
}

std::vector<WitnessRecord> kicked_top_witnesses(const KickedTopParams& params, double theta, double phi, int kicks) {
  const auto trajectory = evolve(coherent_spin_state(params.spin, theta, phi), params, kicks);
  return witness_series(trajectory);
}

std::vector<double> concurrence_signal(std::span<const WitnessRecord> series) {
  std::vector<double> out;
  out.reserve(series.size());
  for (const auto& r : series) out.push_back(r.concurrence);
  return out;
}

std::vector<double> zeta2_signal(std::span<const WitnessRecord> series) {
  std::vector<double> out;
  out.reserve(series.size());
  for (const auto& r : series) out.push_back(r.zeta2);
  return out;
}

}  // namespace qkt
