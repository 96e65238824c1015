#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numbers>
#include <vector>

#include "qkt/events.hpp"
#include "qkt/witness.hpp"

using namespace qkt;

namespace {

std::vector<WitnessRecord> run(double phi) {
  const KickedTopParams params{SpinQuantum::from_particles(50), 3.0, std::numbers::pi / 2};
  return kicked_top_witnesses(params, 2.25, phi, 200);
}

// Reference scan: every adjacent pair classified independently of the library.
EventLog brute_force(const std::vector<double>& s, double eps) {
  EventLog log;
  bool dead_prefix = s[0] <= eps;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const bool was = s[k - 1] > eps, is = s[k] > eps;
    if (!is) ++log.dead_total;
    if (was && !is) log.deaths.push_back(static_cast<int>(k));
    if (!was && is) {
      if (dead_prefix && !log.initial_birth)
        log.initial_birth = static_cast<int>(k);
      else
        log.births.push_back(static_cast<int>(k));
    }
    if (is) dead_prefix = false;
  }
  return log;
}

}  // namespace

TEST_CASE("zeta squared") {
  CHECK(zeta_squared(0.7) == doctest::Approx(0.3));
  CHECK(zeta_squared(1.0) == 0.0);
  CHECK(zeta_squared(1.7) == 0.0);
  CHECK(zeta_squared(0.0) == 1.0);
}

TEST_CASE("transition detection on a hand-built series") {
  const std::vector<double> s{0, 0.2, 0.1, 0, 0, 0.05};
  const auto log = detect_transitions(s);
  REQUIRE(log.initial_birth);
  CHECK(*log.initial_birth == 1);
  CHECK(log.deaths == std::vector<int>{3});
  CHECK(log.births == std::vector<int>{5});
  CHECK(log.dead_total == 2);
}

TEST_CASE("degenerate series") {
  const std::vector<double> zeros(10, 0.0);
  const auto dead = detect_transitions(zeros);
  CHECK(dead.deaths.empty());
  CHECK(dead.births.empty());
  CHECK_FALSE(dead.initial_birth);
  CHECK(dead.dead_total == 9);

  const std::vector<double> alive(10, 0.5);
  const auto living = detect_transitions(alive);
  CHECK(living.deaths.empty());
  CHECK(living.births.empty());
  CHECK_FALSE(living.initial_birth);
  CHECK(living.dead_total == 0);

  const std::vector<double> single{0.0};
  CHECK(detect_transitions(single).dead_total == 0);

  CHECK_THROWS_AS(detect_transitions(std::span<const double>{}), std::invalid_argument);
  CHECK_THROWS_AS(detect_transitions(alive, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(detect_transitions(alive, -1e-3), std::invalid_argument);
}

TEST_CASE("a signal alive at kick 0 has no initial birth") {
  const std::vector<double> s{0.3, 0, 0.2};
  const auto log = detect_transitions(s);
  CHECK_FALSE(log.initial_birth);
  CHECK(log.deaths == std::vector<int>{1});
  CHECK(log.births == std::vector<int>{2});
}

TEST_CASE("random series: interleaving, brute-force agreement, threshold monotonicity") {
  UniformSource uniform(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> s(60);
    for (auto& v : s) v = uniform.next() < 0.4 ? 0.0 : uniform.next() * 1e-3;
    const auto log = detect_transitions(s);
    const auto ref = brute_force(s, kDefaultEventThreshold);
    CHECK(log.deaths == ref.deaths);
    CHECK(log.births == ref.births);
    CHECK(log.initial_birth == ref.initial_birth);
    CHECK(log.dead_total == ref.dead_total);

    std::vector<std::pair<int, bool>> events;
    if (log.initial_birth) events.emplace_back(*log.initial_birth, true);
    for (int k : log.deaths) events.emplace_back(k, false);
    for (int k : log.births) events.emplace_back(k, true);
    std::sort(events.begin(), events.end());
    for (std::size_t i = 1; i < events.size(); ++i) CHECK(events[i].second != events[i - 1].second);

    int previous = -1;
    for (double eps : {1e-9, 1e-5, 1e-4, 5e-4}) {
      const int dead = detect_transitions(s, eps).dead_total;
      CHECK(dead >= previous);
      previous = dead;
    }
  }
}

TEST_CASE("kicked-top event signatures") {
  const auto periodic = run(0.63);
  const auto quasi = run(-2.35);
  const auto chaotic = run(-1.0);

  const auto chaotic_c = detect_transitions(concurrence_signal(chaotic));
  CHECK(chaotic_c.initial_birth == 1);
  CHECK(chaotic_c.deaths.size() == 1);
  CHECK(chaotic_c.births.empty());

  const auto periodic_c = detect_transitions(concurrence_signal(periodic));
  const auto quasi_c = detect_transitions(concurrence_signal(quasi));
  CHECK(periodic_c.births.size() >= 5);
  CHECK(periodic_c.dead_total < quasi_c.dead_total);
  CHECK(quasi_c.dead_total < chaotic_c.dead_total);

  for (const auto* series : {&periodic, &quasi, &chaotic}) {
    const auto c = detect_transitions(concurrence_signal(*series));
    const auto z = detect_transitions(zeta2_signal(*series));
    CHECK(c.deaths == z.deaths);
    CHECK(c.births == z.births);
    CHECK(c.initial_birth == z.initial_birth);
    CHECK(c.dead_total == z.dead_total);
  }
  MESSAGE("periodic deaths " << periodic_c.deaths.size() << " births " << periodic_c.births.size()
                             << " dead " << periodic_c.dead_total << "; quasi dead " << quasi_c.dead_total
                             << "; chaotic dead " << chaotic_c.dead_total);
}
