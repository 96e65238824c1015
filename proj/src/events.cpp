#include "qkt/events.hpp"

#include <algorithm>
#include <stdexcept>

namespace qkt {

double zeta_squared(double xi_t2) { return std::max(0.0, 1.0 - xi_t2); }

EventLog detect_transitions(std::span<const double> signal, double eps) {
  if (signal.empty()) throw std::invalid_argument("detect_transitions: empty series");
  if (!(eps > 0.0)) throw std::invalid_argument("detect_transitions: eps must be positive");
  EventLog log;
  bool alive = signal[0] > eps;
  bool ever_alive = alive;
  for (std::size_t k = 1; k < signal.size(); ++k) {
    const bool now = signal[k] > eps;
    const int kick = static_cast<int>(k);
    if (!now) ++log.dead_total;
    if (alive && !now) {
      log.deaths.push_back(kick);
    } else if (!alive && now) {
      if (ever_alive) {
        log.births.push_back(kick);
      } else {
        log.initial_birth = kick;
        ever_alive = true;
      }
    }
    alive = now;
  }
  return log;
}

}  // namespace qkt
