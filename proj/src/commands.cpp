// Copyright 2026 The icoheat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "icoheat/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "icoheat/channels.hpp"
#include "icoheat/stochastic.hpp"

namespace icoheat {

namespace {

constexpr const char* kDefaultCurveGrid = "0.01:0.49:0.01";
constexpr const char* kDefaultSampleGrid = "0.05:0.45:0.10";

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

double parse_number(std::string_view text, std::string_view what) {
  // std::from_chars for double is not available in every libstdc++ we target.
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ConfigError(std::string(what) + " '" + s + "' is not a finite number");
  }
  return v;
}

void require_open_interval(double v, std::string_view what) {
  if (!(v > 0.0 && v < 0.5)) {
    throw ConfigError("grid " + std::string(what) + " " + format_double(v) +
                      " is outside the open interval (0, 0.5)");
  }
}

Cell cell(std::optional<double> v) { return v ? Cell(*v) : Cell(std::monostate{}); }

std::vector<std::pair<std::string, std::string>> base_metadata(const RunConfig& cfg) {
  return {{"command", std::string(to_string(cfg.command))},
          {"version", std::string(kVersion)},
          {"schema_version", std::to_string(kSchemaVersion)},
          {"omega", "1"},
          {"visibility", format_double(cfg.visibility)}};
}

ThermalSpec spec_at(double e_c) { return ThermalSpec::from_excited_population(e_c); }

std::mt19937_64 verification_rng() { return std::mt19937_64(0x1c0ffeeULL); }

Qubit random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat2 g;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) g(r, c) = Complex(n(rng), n(rng));
  }
  Mat2 rho = g * g.adjoint();
  rho /= rho.trace().real();
  return Qubit(rho);
}

double random_e_c(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.001, 0.499)(rng);
}

std::vector<double> curve_grid() { return parse_grid(kDefaultCurveGrid); }

VerifyCheck tolerance_check(std::string name, double residual, double tolerance) {
  return {std::move(name), residual, tolerance, residual <= tolerance};
}

/// Strict inequality checks report max(0, -margin) as residual.
VerifyCheck margin_check(std::string name, double min_margin) {
  return {std::move(name), std::max(0.0, -min_margin), 0.0, min_margin > 0.0};
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::SweepEnergy: return "sweep-energy";
    case Command::Multipass: return "multipass";
    case Command::SteadyState: return "steady-state";
    case Command::Cop: return "cop";
    case Command::SimulateShots: return "simulate-shots";
    case Command::Verify: return "verify";
  }
  return "?";
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> out;
  if (text.empty()) throw ConfigError("grid is empty");
  if (text.find(':') != std::string_view::npos) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
      const auto next = text.find(':', pos);
      parts.push_back(text.substr(pos, next - pos));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    if (parts.size() != 3) throw ConfigError("grid '" + std::string(text) + "' is not start:stop:step");
    const double start = parse_number(parts[0], "grid start");
    const double stop = parse_number(parts[1], "grid stop");
    const double step = parse_number(parts[2], "grid step");
    require_open_interval(start, "start");
    require_open_interval(stop, "stop");
    if (!(step > 0.0)) throw ConfigError("grid step must be positive");
    if (stop < start) throw ConfigError("grid stop is below grid start");
    const double span = (stop - start) / step;
    if (span > 1e6) throw ConfigError("grid has too many points");
    const auto count = static_cast<std::int64_t>(std::floor(span + 1e-9)) + 1;
    for (std::int64_t k = 0; k < count; ++k) {
      const double v = std::round((start + static_cast<double>(k) * step) * 1e12) / 1e12;
      require_open_interval(v, "value");
      out.push_back(v);
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find(',', pos);
    const double v = parse_number(text.substr(pos, next - pos), "grid value");
    require_open_interval(v, "value");
    out.push_back(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

void validate(const RunConfig& cfg) {
  if (!(cfg.visibility >= 0.0 && cfg.visibility <= 1.0)) {
    throw ConfigError("visibility " + format_double(cfg.visibility) + " is outside [0, 1]");
  }
  if (cfg.command == Command::Verify) return;
  if (cfg.e_c.empty()) throw ConfigError("no reservoir temperatures given");
  for (const double v : cfg.e_c) require_open_interval(v, "value");
  if (cfg.command == Command::Multipass) {
    if (cfg.e_c.size() != 1) throw ConfigError("multipass takes a single --e-c value");
    if (cfg.steps < 1) throw ConfigError("--steps must be at least 1");
  }
  if (cfg.command == Command::SimulateShots) {
    if (cfg.shots < 1) throw ConfigError("--shots must be at least 1");
    try {
      parse_seed(cfg.seed);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
}

void write_csv(const Table& t, std::ostream& os) {
  for (const auto& [k, v] : t.metadata) os << "# " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&os](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
              os << format_double(v);
            } else if constexpr (std::is_same_v<V, std::int64_t>) {
              os << v;
            } else if constexpr (std::is_same_v<V, std::string>) {
              os << v;
            }
          },
          row[i]);
    }
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = t.command;
  auto& meta = doc["metadata"];
  meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.metadata) meta[k] = v;
  doc["columns"] = t.columns;
  auto& rows = doc["rows"];
  rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, std::monostate>) {
              obj[t.columns[i]] = nullptr;
            } else if constexpr (std::is_same_v<V, double>) {
              if (std::isfinite(v)) {
                obj[t.columns[i]] = v;
              } else {
                obj[t.columns[i]] = nullptr;
              }
            } else {
              obj[t.columns[i]] = v;
            }
          },
          row[i]);
    }
    rows.push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

Table cmd_sweep_energy(const RunConfig& cfg) {
  Table t{"sweep-energy", base_metadata(cfg),
          {"e_c", "dE_plus", "dE_minus", "dE_plus_weighted", "dE_minus_weighted", "p_minus",
           "e_plus", "e_minus"},
          {}};
  for (const double e_c : cfg.e_c) {
    const auto spec = spec_at(e_c);
    const Qubit rho = thermal_state(spec);
    const auto& h = spec.hamiltonian();
    const SwitchOutput out = run_switch(spec, rho, cfg.visibility);
    const auto changes = branch_energy_change(out, rho, h);
    const auto& plus = out.branch(ControlOutcome::Plus);
    const auto& minus = out.branch(ControlOutcome::Minus);
    auto change = [&](ControlOutcome o, bool weighted) -> Cell {
      const auto it = changes.find(o);
      if (it == changes.end()) return std::monostate{};
      return weighted ? it->second.dE_weighted : it->second.dE;
    };
    auto branch_energy = [&](const BranchRecord& b) -> Cell {
      return b.state ? Cell(energy(*b.state, h)) : Cell(std::monostate{});
    };
    t.rows.push_back({e_c, change(ControlOutcome::Plus, false), change(ControlOutcome::Minus, false),
                      change(ControlOutcome::Plus, true), change(ControlOutcome::Minus, true),
                      minus.probability, branch_energy(plus), branch_energy(minus)});
  }
  return t;
}

Table cmd_multipass(const RunConfig& cfg) {
  const auto spec = spec_at(cfg.e_c.at(0));
  const auto traj = multipass(spec, cfg.steps, cfg.visibility);
  const auto ss = steady_state(spec, cfg.visibility);
  Table t{"multipass", base_metadata(cfg), {"step", "e_plus", "e_minus", "p_minus"}, {}};
  t.metadata.emplace_back("e_c", format_double(spec.e_c()));
  t.metadata.emplace_back("steps", std::to_string(cfg.steps));
  t.metadata.emplace_back("input_energy", format_double(traj.input_energy));
  for (const auto& s : traj.steps) {
    t.rows.push_back({static_cast<std::int64_t>(s.n), s.e_plus, cell(s.e_minus), s.prob_minus});
  }
  t.rows.push_back({std::string("ss"), ss.x_star * spec.hamiltonian().omega(), ss.e_minus_star,
                    ss.prob_minus_star});
  return t;
}

Table cmd_steady_state(const RunConfig& cfg) {
  Table t{"steady-state", base_metadata(cfg), {"e_c", "x_star", "e_minus_star", "p_minus_star"}, {}};
  for (const double e_c : cfg.e_c) {
    const auto ss = steady_state(spec_at(e_c), cfg.visibility);
    t.rows.push_back({e_c, ss.x_star, ss.e_minus_star, ss.prob_minus_star});
  }
  return t;
}

Table cmd_cop(const RunConfig& cfg) {
  Table t{"cop", base_metadata(cfg), {"e_c", "strategy", "p_minus", "dE", "dW", "n_bar", "eta"}, {}};
  t.metadata.emplace_back("beta_reset_rule", cfg.beta_reset.describe());
  t.metadata.emplace_back("beta_hot_rule", "equal-cold");
  const auto classical = cop_sweep(cfg.e_c, cfg.beta_reset, Strategy::Classical);
  const auto multi = cop_sweep(cfg.e_c, cfg.beta_reset, Strategy::MultiPass);
  for (std::size_t i = 0; i < cfg.e_c.size(); ++i) {
    for (const auto* r : {&classical[i], &multi[i]}) {
      t.rows.push_back({cfg.e_c[i], std::string(to_string(r->strategy)), r->p_minus, r->dE, r->dW,
                        r->n_bar, r->eta});
    }
  }
  return t;
}

Table cmd_simulate_shots(const RunConfig& cfg) {
  const std::uint64_t seed = parse_seed(cfg.seed);
  const auto samples = sample_sweep(cfg.e_c, cfg.shots, seed, cfg.visibility, cfg.basis);
  Table t{"simulate-shots", base_metadata(cfg),
          {"e_c", "outcome", "count", "excited_count", "e_hat", "std_err", "exact"},
          {}};
  t.metadata.emplace_back("rng", std::string(kRngAlgorithm));
  t.metadata.emplace_back("seed", cfg.seed);
  t.metadata.emplace_back("shots", std::to_string(cfg.shots));
  t.metadata.emplace_back("basis", std::string(to_string(cfg.basis)));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto spec = spec_at(cfg.e_c[i]);
    const SwitchOutput exact = run_switch(spec, thermal_state(spec), cfg.visibility);
    const auto& s = samples[i];
    for (const auto o : s.outcomes) {
      const auto& est = s.estimates.at(o);
      const auto& b = exact.branch(o);
      const Cell exact_cell = b.state ? Cell(b.state->population(1)) : Cell(std::monostate{});
      t.rows.push_back({cfg.e_c[i], std::string(to_string(o)),
                        static_cast<std::int64_t>(s.outcome_count(o)),
                        static_cast<std::int64_t>(s.count(o, EnergyLevel::Excited)),
                        est ? Cell(est->e_hat) : Cell(std::monostate{}),
                        est ? Cell(est->std_err) : Cell(std::monostate{}), exact_cell});
    }
  }
  return t;
}

std::vector<VerifyCheck> run_verification(double closed_form_visibility) {
  std::vector<VerifyCheck> checks;
  auto rng = verification_rng();
  const Qubit plus = plus_state();

  {
    double closed_err = 0.0;
    double recon = 0.0;
    for (int k = 0; k < 100; ++k) {
      const auto spec = spec_at(random_e_c(rng));
      const Qubit rho = random_state(rng);
      const Joint brute = brute_force_switch(spec, rho, plus);
      const Joint closed = closed_form_switch(spec, rho, plus, closed_form_visibility);
      closed_err = std::max(closed_err, max_abs(Mat4(closed.matrix() - brute.matrix())));

      const SwitchOutput out = run_switch(spec, rho);
      const Mat2 reduced = reduced_system(out.joint).matrix();
      for (const auto basis : {ControlBasis::PlusMinus, ControlBasis::Computational}) {
        Mat2 acc = Mat2::Zero();
        for (const auto o : outcomes_of(basis)) {
          const auto& b = out.branch(o);
          if (b.state) acc += b.probability * b.state->matrix();
        }
        recon = std::max(recon, max_abs(Mat2(acc - reduced)));
      }
    }
    checks.push_back(tolerance_check("closed_form_vs_kraus_sum", closed_err, 1e-12));
    checks.push_back(tolerance_check("branch_reconstruction", recon, 1e-12));
  }

  {
    double conservation = 0.0;
    double classical = 0.0;
    double sign_margin = 1.0;
    double monotone_margin = 1.0;
    double prev_p = -1.0;
    for (const double e_c : curve_grid()) {
      const auto spec = spec_at(e_c);
      const Qubit t = thermal_state(spec);
      const SwitchOutput out = run_switch(spec, t);
      const auto changes = branch_energy_change(out, t, spec.hamiltonian());
      const auto& p = changes.at(ControlOutcome::Plus);
      const auto& m = changes.at(ControlOutcome::Minus);
      conservation = std::max(conservation, std::abs(p.dE_weighted + m.dE_weighted));
      for (const auto o : {ControlOutcome::Zero, ControlOutcome::One}) {
        classical = std::max(classical, std::abs(changes.at(o).dE));
        classical = std::max(classical, max_abs(Mat2(out.branch(o).state->matrix() - t.matrix())));
      }
      sign_margin = std::min({sign_margin, m.dE, -p.dE});
      const double p_minus = out.branch(ControlOutcome::Minus).probability;
      if (prev_p >= 0.0) monotone_margin = std::min(monotone_margin, p_minus - prev_p);
      prev_p = p_minus;
    }
    checks.push_back(tolerance_check("energy_conservation", conservation, 1e-12));
    checks.push_back(tolerance_check("computational_basis_no_heat", classical, 1e-12));
    checks.push_back(margin_check("heat_extraction_sign", sign_margin));
    checks.push_back(margin_check("success_probability_increasing", monotone_margin));
  }

  {
    double fixed_output = 0.0;
    double self_fidelity = 0.0;
    for (int k = 0; k < 100; ++k) {
      const auto spec = spec_at(random_e_c(rng));
      const auto ch = thermalizing_channel(spec);
      const Qubit rho = random_state(rng);
      fixed_output = std::max(
          fixed_output, max_abs(Mat2(apply(ch, rho).matrix() - thermal_state(spec).matrix())));
      self_fidelity = std::max(self_fidelity, std::abs(1.0 - channel_fidelity(ch, ch)));
    }
    checks.push_back(tolerance_check("thermalizing_fixed_output", fixed_output, 1e-12));
    checks.push_back(tolerance_check("channel_self_fidelity", self_fidelity, 1e-12));
  }

  {
    const double x = steady_state(spec_at(0.25)).x_star;
    checks.push_back(
        tolerance_check("steady_state_closed_form", std::abs(x - (3.0 - std::sqrt(7.0)) / 2.0), 1e-12));
    double iteration = 0.0;
    double dominance = 1.0;
    for (const double e_c : parse_grid(kDefaultSampleGrid)) {
      const auto spec = spec_at(e_c);
      const auto traj = multipass(spec, 200);
      iteration = std::max(iteration, std::abs(traj.steps.back().e_plus - steady_state(spec).x_star));
      const double beta = spec.beta();
      dominance = std::min(dominance, cycle_report(spec, beta, Strategy::MultiPass).eta -
                                          cycle_report(spec, beta, Strategy::Classical).eta);
    }
    checks.push_back(tolerance_check("steady_state_iteration", iteration, 1e-9));
    checks.push_back(margin_check("cop_multipass_dominance", dominance));
  }
  return checks;
}

Table verification_table(const std::vector<VerifyCheck>& checks, double closed_form_visibility) {
  Table t{"verify",
          {{"command", "verify"},
           {"version", std::string(kVersion)},
           {"schema_version", std::to_string(kSchemaVersion)},
           {"closed_form_visibility", format_double(closed_form_visibility)}},
          {"check", "residual", "tolerance", "passed"},
          {}};
  for (const auto& c : checks) {
    t.rows.push_back({c.name, c.residual, c.tolerance, std::string(c.passed ? "true" : "false")});
  }
  return t;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    Table table;
    int code = kExitOk;
    switch (cfg.command) {
      case Command::SweepEnergy: table = cmd_sweep_energy(cfg); break;
      case Command::Multipass: table = cmd_multipass(cfg); break;
      case Command::SteadyState: table = cmd_steady_state(cfg); break;
      case Command::Cop: table = cmd_cop(cfg); break;
      case Command::SimulateShots: table = cmd_simulate_shots(cfg); break;
      case Command::Verify: {
        const auto checks = run_verification(cfg.visibility);
        for (const auto& c : checks) {
          err << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  residual=" << format_sci(c.residual)
              << "  tolerance=" << format_sci(c.tolerance) << '\n';
          if (!c.passed) code = kExitVerifyFailed;
        }
        table = verification_table(checks, cfg.visibility);
        break;
      }
    }

    std::ofstream file;
    std::ostream* sink = &out;
    const char* ext = cfg.format == OutputFormat::Json ? ".json" : ".csv";
    std::optional<std::filesystem::path> path;
    if (cfg.out_path) {
      path = *cfg.out_path;
    } else if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
      path = std::filesystem::path(dir) / (std::string(to_string(cfg.command)) + ext);
    }
    if (path) {
      file.open(*path, std::ios::binary | std::ios::trunc);
      if (!file) throw ConfigError("cannot open output file " + path->string());
      sink = &file;
    }
    if (cfg.format == OutputFormat::Json) {
      write_json(table, *sink);
    } else {
      write_csv(table, *sink);
    }
    if (file.is_open()) {
      file.close();
      err << "wrote " << path->string() << '\n';
    }
    return code;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum-switch heat extraction and refrigeration simulator", "icoheat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  struct Raw {
    std::optional<double> e_c;
    std::optional<std::string> grid;
    int steps = 10;
    double visibility = 1.0;
    std::string beta_reset = "equal-cold";
    std::uint64_t shots = 100000;
    std::string seed = "0";
    std::string basis = "plus-minus";
    std::string format = "csv";
    std::optional<std::string> out;
  } raw;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", raw.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", raw.out, "Output file (default: standard output)");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--e-c", raw.e_c, "Reservoir excited population in (0, 0.5)");
    sub->add_option("--grid", raw.grid, "start:stop:step or comma-separated list");
    sub->add_option("--visibility", raw.visibility, "Interferometric visibility in [0, 1]");
    add_output(sub);
  };

  struct Sub {
    Command command;
    CLI::App* app;
    const char* default_grid;
  };
  std::vector<Sub> subs;
  auto* sweep = app.add_subcommand("sweep-energy", "Branch energy changes against reservoir temperature");
  add_grid(sweep);
  subs.push_back({Command::SweepEnergy, sweep, kDefaultCurveGrid});

  auto* multi = app.add_subcommand("multipass", "Repeated passes on failed outcomes");
  add_grid(multi);
  multi->add_option("--steps", raw.steps, "Number of switch passes");
  subs.push_back({Command::Multipass, multi, "0.25"});

  auto* steady = app.add_subcommand("steady-state", "Plus-branch fixed point per temperature");
  add_grid(steady);
  subs.push_back({Command::SteadyState, steady, kDefaultCurveGrid});

  auto* cop = app.add_subcommand("cop", "Refrigerator coefficient of performance, both strategies");
  add_grid(cop);
  cop->add_option("--beta-reset", raw.beta_reset,
                  "Reset-reservoir inverse temperature: 'equal-cold' or a positive number");
  subs.push_back({Command::Cop, cop, kDefaultSampleGrid});

  auto* shots = app.add_subcommand("simulate-shots", "Finite-shot Monte Carlo of the measurement");
  add_grid(shots);
  shots->add_option("--shots", raw.shots, "Shots per grid point");
  shots->add_option("--seed", raw.seed, "Master seed, decimal or 0x-prefixed hex");
  shots->add_option("--basis", raw.basis, "Control measurement basis")
      ->check(CLI::IsMember({"plus-minus", "computational"}));
  subs.push_back({Command::SimulateShots, shots, "0.25"});

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--visibility", raw.visibility,
                     "Visibility injected into the closed-form check (1 = ideal)");
  add_output(verify);
  subs.push_back({Command::Verify, verify, nullptr});

  std::vector<const char*> argv{"icoheat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  RunConfig cfg;
  try {
    const auto it = std::find_if(subs.begin(), subs.end(), [](const Sub& s) { return s.app->parsed(); });
    cfg.command = it->command;
    if (raw.e_c && raw.grid) throw ConfigError("give either --e-c or --grid, not both");
    if (cfg.command != Command::Verify) {
      if (raw.e_c) {
        cfg.e_c = {*raw.e_c};
      } else {
        cfg.e_c = parse_grid(raw.grid ? *raw.grid : it->default_grid);
      }
    }
    cfg.steps = raw.steps;
    cfg.visibility = raw.visibility;
    if (raw.beta_reset == "equal-cold") {
      cfg.beta_reset = BetaResetRule::equal_cold();
    } else {
      const double beta = parse_number(raw.beta_reset, "--beta-reset");
      if (!(beta > 0.0)) throw ConfigError("--beta-reset must be positive");
      cfg.beta_reset = BetaResetRule::explicit_value(beta);
    }
    cfg.shots = raw.shots;
    cfg.seed = raw.seed;
    cfg.basis = raw.basis == "computational" ? ControlBasis::Computational : ControlBasis::PlusMinus;
    cfg.format = raw.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    cfg.out_path = raw.out;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return run(cfg, out, err);
}

}  // namespace icoheat
