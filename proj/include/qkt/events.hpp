#pragma once

// Sudden death / sudden birth detection on witness time series.

#include <optional>
#include <span>
#include <vector>

namespace qkt {

inline constexpr double kDefaultEventThreshold = 1e-9;

/// max(0, 1 - xi_T^2).
double zeta_squared(double xi_t2);

struct EventLog {
  /// Kicks k with signal[k-1] > eps and signal[k] <= eps.
  std::vector<int> deaths;
  /// Kicks k with signal[k-1] <= eps and signal[k] > eps, excluding the initial birth.
  std::vector<int> births;
  /// First rise out of an all-zero prefix that starts at kick 0.
  std::optional<int> initial_birth;
  /// Number of kicks k >= 1 with signal[k] <= eps.
  int dead_total = 0;
};

/// Throws std::invalid_argument for an empty series or eps <= 0.
EventLog detect_transitions(std::span<const double> signal, double eps = kDefaultEventThreshold);

}  // namespace qkt
