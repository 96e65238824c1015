#pragma once

// Per-kick witness records along a kicked-top trajectory.

#include <optional>
#include <span>
#include <vector>

#include "qkt/entanglement.hpp"
#include "qkt/events.hpp"
#include "qkt/kicked_top.hpp"
#include "qkt/squeezing.hpp"

namespace qkt {

struct WitnessRecord {
  int kick = 0;
  Moments moments;
  double norm = 1.0;
  double xi_t2 = 1.0;
  std::optional<double> xi_ku2;
  std::optional<double> xi_n2;
  double xi_c2 = 1.0;
  double concurrence = 0.0;
  double c1 = 0.0;
  double c_min = 0.0;
  double zeta2 = 0.0;
  Vec3 min_direction = Vec3::UnitX();
  bool degenerate = false;
  std::optional<MeanSpinFrame> frame;
};

WitnessRecord witness_record(const StateVector& state, int kick);

std::vector<WitnessRecord> witness_series(std::span<const StateVector> trajectory);

/// Evolves the coherent state (theta, phi) and records every kick 0..kicks.
std::vector<WitnessRecord> kicked_top_witnesses(const KickedTopParams& params, double theta, double phi, int kicks);

std::vector<double> concurrence_signal(std::span<const WitnessRecord> series);
std::vector<double> zeta2_signal(std::span<const WitnessRecord> series);

}  // namespace qkt
