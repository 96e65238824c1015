#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "qkt/entanglement.hpp"
#include "qkt/full_space.hpp"
#include "qkt/witness.hpp"

namespace qkt::cli {

namespace {

using json = nlohmann::ordered_json;

json real_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double or_nan(const std::optional<double>& v) { return v ? *v : std::nan(""); }

/// A header plus rows of preformatted cells, emitted as CSV or as a JSON array of objects.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<json> row) { rows_.push_back(std::move(row)); }

  void write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "," : "") << header_[i];
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell(row[i]);
      out << '\n';
    }
  }

  json to_json() const {
    json rows = json::array();
    for (const auto& row : rows_) {
      json obj = json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[header_[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    return rows;
  }

 private:
  static std::string cell(const json& v) {
    if (v.is_null()) return "nan";
    if (v.is_number_float()) return format_real(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  std::vector<std::string> header_;
  std::vector<std::vector<json>> rows_;
};

KickedTopParams params_of(const RunConfig& c) {
  KickedTopParams params{SpinQuantum::from_particles(c.n), c.kappa, c.p};
  params.validate();
  return params;
}

json event_json(const EventLog& log) {
  return {{"initial_birth", log.initial_birth ? json(*log.initial_birth) : json(nullptr)},
          {"deaths", log.deaths},
          {"births", log.births},
          {"dead_total", log.dead_total}};
}

json events_json(const std::vector<WitnessRecord>& series, double eps) {
  return {{"eps", eps},
          {"concurrence", event_json(detect_transitions(concurrence_signal(series), eps))},
          {"zeta2", event_json(detect_transitions(zeta2_signal(series), eps))}};
}

void write(const Table& table, const RunConfig& c, std::ostream& out) {
  if (c.format == Format::csv) {
    table.write_csv(out);
  } else {
    out << table.to_json().dump(2) << '\n';
  }
}

StateVector random_state(SpinQuantum spin, UniformSource& uniform) {
  CVector v(static_cast<Eigen::Index>(spin.dim()));
  for (auto& a : v) {
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform.next()));
    a = std::polar(r, 2.0 * std::numbers::pi * uniform.next());
  }
  return StateVector::normalized(spin, v);
}

double max_abs(const auto& m) { return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff()); }

double lowest_eigenvalue(const Mat3& m) { return Eigen::SelfAdjointEigenSolver<Mat3>(m).eigenvalues()(0); }

}  // namespace

void RunConfig::validate() const {
  if (n < 2) throw UsageError("--n must be at least 2");
  if (kicks < 0) throw UsageError("--kicks must be non-negative");
  if (!(eps > 0.0)) throw UsageError("--eps must be positive");
  if (threads < 0) throw UsageError("--threads must be non-negative");
  if (states < 1) throw UsageError("--states must be at least 1");
  if (!std::isfinite(kappa) || !std::isfinite(p) || !std::isfinite(theta) || !std::isfinite(phi))
    throw UsageError("angles and kick strengths must be finite");
  for (int m : oracle_particles)
    if (m < 2 || m > 4) throw UsageError("oracle-check supports N in 2..4");
}

RunConfig apply_json(RunConfig c, const nlohmann::json& config) {
  if (!config.is_object()) throw UsageError("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : config.items()) {
      if (key == "n") c.n = value.get<int>();
      else if (key == "kappa") c.kappa = value.get<double>();
      else if (key == "p") c.p = value.get<double>();
      else if (key == "theta") c.theta = value.get<double>(), c.single_state = true;
      else if (key == "phi") c.phi = value.get<double>(), c.single_state = true;
      else if (key == "kicks") c.kicks = value.get<int>();
      else if (key == "eps") c.eps = value.get<double>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "out") c.out = value.get<std::string>();
      else if (key == "format") {
        const auto f = value.get<std::string>();
        if (f != "csv" && f != "json") throw UsageError("format must be csv or json");
        c.format = f == "csv" ? Format::csv : Format::json;
      } else if (key == "threads") c.threads = value.get<int>();
      else if (key == "states") c.states = value.get<int>();
      else if (key == "thetas") c.thetas = value.get<std::vector<double>>();
      else if (key == "phis") c.phis = value.get<std::vector<double>>();
      else throw UsageError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("config value has the wrong type: ") + e.what());
  }
  return c;
}

std::vector<double> parse_range(const std::string& text) {
  double a = 0, b = 0;
  int n = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &a, &b, &n, &tail) != 3 || n < 1)
    throw UsageError("range must look like start:stop:count, got '" + text + "'");
  if (n == 1) return {a};
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return values;
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void cmd_evolve(const RunConfig& c, std::ostream& out) {
  const auto series = kicked_top_witnesses(params_of(c), c.theta, c.phi, c.kicks);
  Table table({"kick", "jx", "jy", "jz", "xi_T2", "xi_KU2", "xi_n2", "xi_C2", "concurrence", "c1", "c_min", "zeta2",
               "theta0", "phi0", "dir_x", "dir_y", "dir_z", "frame_defined"});
  for (const auto& r : series) {
    const Vec3& j = r.moments.first;
    table.add({r.kick, j(0), j(1), j(2), r.xi_t2, real_json(or_nan(r.xi_ku2)), real_json(or_nan(r.xi_n2)), r.xi_c2,
               r.concurrence, r.c1, r.c_min, r.zeta2, real_json(r.frame ? r.frame->theta0 : std::nan("")),
               real_json(r.frame ? r.frame->phi0 : std::nan("")), r.min_direction(0), r.min_direction(1),
               r.min_direction(2), r.frame ? 1 : 0});
  }
  const json events = events_json(series, c.eps);
  if (c.format == Format::csv) {
    table.write_csv(out);
    for (const char* signal : {"concurrence", "zeta2"})
      out << "# " << json{{"signal", signal}, {"eps", c.eps}, {"events", events[signal]}}.dump() << '\n';
  } else {
    out << json{{"rows", table.to_json()}, {"events", events}}.dump(2) << '\n';
  }
}

void cmd_classical_map(const RunConfig& c, std::ostream& out) {
  Table table({"state_index", "kick", "theta", "phi", "X", "Y", "Z"});
  if (c.single_state) {
    const auto path = classical_trajectory(ClassicalPoint::from_angles(c.theta, c.phi), c.kappa, c.kicks);
    for (std::size_t k = 0; k < path.size(); ++k)
      table.add({0, static_cast<int>(k), path[k].theta(), path[k].phi(), path[k].x(), path[k].y(), path[k].z()});
  } else {
    for (const auto& pt : phase_space_map(c.kappa, c.states, c.kicks, c.seed))
      table.add({pt.state_index, pt.kick, pt.theta, pt.phi, pt.point.x(), pt.point.y(), pt.point.z()});
  }
  write(table, c, out);
}

void cmd_directions(const RunConfig& c, std::ostream& out) {
  const auto series = kicked_top_witnesses(params_of(c), c.theta, c.phi, c.kicks);
  Table table({"kick", "proj_n", "proj_n1", "proj_n2", "frame_defined", "degenerate"});
  for (const auto& r : series) {
    if (r.frame) {
      const Vec3& d = r.min_direction;
      table.add({r.kick, d.dot(r.frame->n), d.dot(r.frame->n1), d.dot(r.frame->n2), 1, r.degenerate ? 1 : 0});
    } else {
      table.add({r.kick, nullptr, nullptr, nullptr, 0, r.degenerate ? 1 : 0});
    }
  }
  write(table, c, out);
}

void cmd_sweep(const RunConfig& c, std::ostream& out) {
  const std::vector<double> thetas = c.thetas.empty() ? std::vector<double>{c.theta} : c.thetas;
  const std::vector<double> phis = c.phis.empty() ? std::vector<double>{c.phi} : c.phis;
  const std::size_t total = thetas.size() * phis.size();
  const KickedTopParams params = params_of(c);

  std::vector<std::vector<json>> rows(total);
  auto run_point = [&](std::size_t index) {
    const double theta = thetas[index / phis.size()];
    const double phi = phis[index % phis.size()];
    std::vector<json> row{static_cast<std::uint64_t>(index), theta, phi};
    try {
      const auto series = kicked_top_witnesses(params, theta, phi, c.kicks);
      row.push_back("ok");
      for (const auto& signal : {concurrence_signal(series), zeta2_signal(series)}) {
        const auto log = detect_transitions(signal, c.eps);
        row.push_back(log.initial_birth ? json(*log.initial_birth) : json(-1));
        row.push_back(log.deaths.size());
        row.push_back(log.births.size());
        row.push_back(log.dead_total);
        row.push_back(log.deaths.empty() ? -1 : log.deaths.front());
      }
      double min_t2 = series.front().xi_t2;
      for (const auto& r : series) min_t2 = std::min(min_t2, r.xi_t2);
      row.push_back(min_t2);
    } catch (const std::exception& e) {
      std::string message = std::string("error: ") + e.what();
      std::replace(message.begin(), message.end(), ',', ';');
      row.push_back(message);
    }
    rows[index] = std::move(row);
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(total, c.threads > 0 ? static_cast<std::size_t>(c.threads) : hw);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < total;) run_point(i);
    });
  for (auto& t : pool) t.join();

  Table table({"grid_index", "theta", "phi", "status", "c_initial_birth", "c_deaths", "c_births", "c_dead_total",
               "c_first_death", "z_initial_birth", "z_deaths", "z_births", "z_dead_total", "z_first_death",
               "min_xi_T2"});
  for (auto& row : rows) {
    row.resize(15, nullptr);
    table.add(std::move(row));
  }
  write(table, c, out);
}

bool OracleReport::passed(double tolerance) const {
  return std::all_of(deviations.begin(), deviations.end(),
                     [&](const OracleDeviation& d) { return d.max_deviation < tolerance; });
}

OracleReport oracle_suite(int particles, std::uint64_t seed, int states, int kicks, double kappa, double p) {
  const auto spin = SpinQuantum::from_particles(particles);
  UniformSource uniform(seed);
  double moment_dev = 0, rho_dev = 0, corr_dev = 0, cmin_dev = 0, conc_dev = 0;
  for (int trial = 0; trial < states; ++trial) {
    const auto psi = random_state(spin, uniform);
    const CVector full = full_space::symmetric_embed(psi);
    const Moments m = moments(psi);
    const Moments mf = full_space::moments(full, particles);
    moment_dev = std::max({moment_dev, max_abs(m.first - mf.first), max_abs(m.second - mf.second),
                           std::abs(m.jsq - mf.jsq)});

    const auto rho = rho12_from_moments(m, particles);
    const auto rho_full = full_space::partial_trace_pair(full, particles);
    rho_dev = std::max(rho_dev, max_abs(rho.entries() - rho_full.entries()));

    const Mat3 direct = full_space::pair_correlation_matrix(full, particles);
    corr_dev = std::max(corr_dev, max_abs(pairwise_correlation_matrix(m, particles) - direct));
    cmin_dev = std::max(cmin_dev, std::abs(min_pairwise_correlation(m, particles) - lowest_eigenvalue(direct)));

    conc_dev = std::max(conc_dev, std::abs(concurrence(rho, particles).concurrence -
                                           concurrence(rho_full, particles).concurrence));
  }

  const KickedTopParams params{spin, kappa, p};
  params.validate();
  const CMatrix u = full_space::floquet_matrix(params);
  double state_dev = 0, evo_conc_dev = 0;
  for (const auto& start : {coherent_spin_state(spin, 2.25, 0.63), random_state(spin, uniform)}) {
    CVector full = full_space::symmetric_embed(start);
    for (const auto& state : evolve(start, params, kicks)) {
      state_dev = std::max(state_dev, (full_space::symmetric_embed(state) - full).cwiseAbs().maxCoeff());
      evo_conc_dev = std::max(
          evo_conc_dev, std::abs(concurrence(rho12_from_moments(moments(state), particles), particles).concurrence -
                                 concurrence(full_space::partial_trace_pair(full, particles), particles).concurrence));
      full = u * full;
    }
  }

  return {particles,
          {{"moments", moment_dev},
           {"rho12_reconstruction", rho_dev},
           {"correlation_matrix", corr_dev},
           {"min_correlation_identity", cmin_dev},
           {"concurrence", conc_dev},
           {"evolution_state", state_dev},
           {"evolution_concurrence", evo_conc_dev}}};
}

bool cmd_oracle_check(const RunConfig& c, std::ostream& out) {
  json reports = json::array();
  bool all_passed = true;
  for (int particles : c.oracle_particles) {
    const auto report = oracle_suite(particles, c.seed, c.states, c.kicks, c.kappa, c.p);
    json deviations = json::object();
    json failing = json::array();
    for (const auto& d : report.deviations) {
      deviations[d.name] = d.max_deviation;
      if (!(d.max_deviation < kOracleTolerance)) failing.push_back(d.name);
    }
    all_passed = all_passed && failing.empty();
    reports.push_back({{"n", particles},
                       {"states", c.states},
                       {"kicks", c.kicks},
                       {"max_deviation", std::move(deviations)},
                       {"failing", std::move(failing)}});
  }
  out << json{{"tolerance", kOracleTolerance}, {"passed", all_passed}, {"reports", std::move(reports)}}.dump(2)
      << '\n';
  return all_passed;
}

}  // namespace qkt::cli
