#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using qkt::cli::RunConfig;
using qkt::cli::UsageError;

/// Values given explicitly on the command line; unset fields leave the config untouched.
struct Flags {
  std::optional<int> n;
  std::optional<double> kappa, p, theta, phi, eps;
  std::optional<int> kicks, threads, states;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out, format, config;
  std::vector<double> thetas, phis;
  std::optional<std::string> theta_range, phi_range;
};

void add_common(CLI::App* cmd, Flags& f, bool grid = false) {
  cmd->add_option("--n", f.n, "number of spin-1/2 particles (default 50)");
  cmd->add_option("--kappa", f.kappa, "twist strength (default 3)");
  cmd->add_option("--p", f.p, "kick angle in radians (default pi/2)");
  cmd->add_option("--theta", f.theta, "initial polar angle (default 2.25)");
  cmd->add_option("--phi", f.phi, "initial azimuth (default 0.63)");
  cmd->add_option("--kicks", f.kicks, "number of kicks (default 200)");
  cmd->add_option("--eps", f.eps, "event threshold (default 1e-9)");
  cmd->add_option("--seed", f.seed, "random seed (default 1)");
  cmd->add_option("--out", f.out, "output file (default stdout)");
  cmd->add_option("--format", f.format, "csv or json (default csv)")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--config", f.config, "JSON config file; explicit flags take precedence");
  cmd->add_option("--threads", f.threads, "worker threads for sweeps (default: all cores)");
  if (grid) {
    cmd->add_option("--thetas", f.thetas, "theta grid values")->delimiter(',');
    cmd->add_option("--phis", f.phis, "phi grid values")->delimiter(',');
    cmd->add_option("--theta-range", f.theta_range, "theta grid as start:stop:count")->excludes("--thetas");
    cmd->add_option("--phi-range", f.phi_range, "phi grid as start:stop:count")->excludes("--phis");
  }
}

RunConfig resolve(RunConfig c, const Flags& f, bool& n_given) {
  n_given = f.n.has_value();
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw UsageError("cannot read config file '" + *f.config + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("config file is not valid JSON: ") + e.what());
    }
    c = qkt::cli::apply_json(c, j);
    n_given = n_given || j.contains("n");
  }
  if (f.n) c.n = *f.n;
  if (f.kappa) c.kappa = *f.kappa;
  if (f.p) c.p = *f.p;
  if (f.theta) c.theta = *f.theta, c.single_state = true;
  if (f.phi) c.phi = *f.phi, c.single_state = true;
  if (f.kicks) c.kicks = *f.kicks;
  if (f.eps) c.eps = *f.eps;
  if (f.seed) c.seed = *f.seed;
  if (f.out) c.out = *f.out;
  if (f.format) c.format = *f.format == "json" ? qkt::cli::Format::json : qkt::cli::Format::csv;
  if (f.threads) c.threads = *f.threads;
  if (f.states) c.states = *f.states;
  if (!f.thetas.empty()) c.thetas = f.thetas;
  if (!f.phis.empty()) c.phis = f.phis;
  if (f.theta_range) c.thetas = qkt::cli::parse_range(*f.theta_range);
  if (f.phi_range) c.phis = qkt::cli::parse_range(*f.phi_range);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum kicked top: squeezing, pairwise entanglement and sudden-death events"};
  app.require_subcommand(1);
  Flags flags;

  auto* evolve = app.add_subcommand("evolve", "per-kick witness series with event summaries");
  add_common(evolve, flags);
  auto* classical = app.add_subcommand("classical-map", "classical stroboscopic phase-space map");
  add_common(classical, flags);
  classical->add_option("--states", flags.states, "random initial states (default 200); --theta/--phi select one");
  auto* directions = app.add_subcommand("directions", "maximal-squeezing direction in the mean-spin frame");
  add_common(directions, flags);
  auto* sweep = app.add_subcommand("sweep", "event summaries over a theta x phi grid");
  add_common(sweep, flags, true);
  auto* oracle = app.add_subcommand("oracle-check", "compare against brute-force 2^N computations, N in 2..4");
  add_common(oracle, flags);
  oracle->add_option("--states", flags.states, "random states per N (default 50)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? qkt::cli::kExitOk : qkt::cli::kExitUsage;
  }

  try {
    RunConfig base;
    if (oracle->parsed()) {
      base.kicks = 5;
      base.states = 50;
    }
    bool n_given = false;
    RunConfig config = resolve(base, flags, n_given);
    if (oracle->parsed() && n_given) config.oracle_particles = {config.n};
    config.validate();

    std::ofstream file;
    if (!config.out.empty()) {
      file.open(config.out, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open '" << config.out << "' for writing\n";
        return qkt::cli::kExitFailure;
      }
    }
    std::ostream& out = config.out.empty() ? std::cout : file;

    int status = qkt::cli::kExitOk;
    if (evolve->parsed()) qkt::cli::cmd_evolve(config, out);
    if (classical->parsed()) qkt::cli::cmd_classical_map(config, out);
    if (directions->parsed()) qkt::cli::cmd_directions(config, out);
    if (sweep->parsed()) qkt::cli::cmd_sweep(config, out);
    if (oracle->parsed() && !qkt::cli::cmd_oracle_check(config, out)) {
      std::cerr << "oracle-check: deviations at or above " << qkt::cli::kOracleTolerance << '\n';
      status = qkt::cli::kExitFailure;
    }
    out.flush();
    if (!out) {
      std::cerr << "error: write failed\n";
      return qkt::cli::kExitFailure;
    }
    return status;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return qkt::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qkt::cli::kExitFailure;
  }
}
