#pragma once

// Subcommand implementations behind the qkt executable. Each command writes
// its full output to a stream so tests can compare bytes directly.

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qkt::cli {

enum class Format { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad flag values or combinations; maps to exit status 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  int n = 50;
  double kappa = 3.0;
  double p = std::numbers::pi / 2.0;
  double theta = 2.25;
  double phi = 0.63;
  int kicks = 200;
  double eps = 1e-9;
  std::uint64_t seed = 1;
  std::string out;
  Format format = Format::csv;
  int threads = 0;  // 0: hardware concurrency

  /// classical-map: number of random initial states, or one trajectory from
  /// (theta, phi) when single_state is set. oracle-check: random states per N.
  int states = 200;
  bool single_state = false;

  /// sweep grid; empty lists fall back to the single (theta, phi).
  std::vector<double> thetas;
  std::vector<double> phis;

  /// oracle-check: particle numbers to run.
  std::vector<int> oracle_particles{2, 3, 4};

  /// Throws UsageError on N < 2, kicks < 0, eps <= 0 and similar.
  void validate() const;
};

/// Overlays keys present in a config object onto base. Unknown keys are a usage error.
RunConfig apply_json(RunConfig base, const nlohmann::json& config);

/// "a:b:n" -> n evenly spaced values including both ends.
std::vector<double> parse_range(const std::string& text);

/// 17 significant digits; "nan" for undefined values.
std::string format_real(double value);

void cmd_evolve(const RunConfig& config, std::ostream& out);
void cmd_classical_map(const RunConfig& config, std::ostream& out);
void cmd_directions(const RunConfig& config, std::ostream& out);
void cmd_sweep(const RunConfig& config, std::ostream& out);

struct OracleDeviation {
  std::string name;
  double max_deviation = 0.0;
};

struct OracleReport {
  int particles = 0;
  std::vector<OracleDeviation> deviations;
  bool passed(double tolerance) const;
};

inline constexpr double kOracleTolerance = 1e-9;

/// Moment relations, pair-state reconstruction, correlation matrix, minimal
/// correlation identity, concurrence, and Dicke vs full-space evolution over
/// the given number of kicks, for seeded random symmetric states of N particles.
OracleReport oracle_suite(int particles, std::uint64_t seed, int states, int kicks, double kappa, double p);

/// Writes a JSON report; returns true iff every deviation is below kOracleTolerance.
bool cmd_oracle_check(const RunConfig& config, std::ostream& out);

}  // namespace qkt::cli
