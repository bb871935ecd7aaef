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

#ifndef ICOHEAT_COMMANDS_HPP
#define ICOHEAT_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "icoheat/quantum_switch.hpp"
#include "icoheat/thermo_cycle.hpp"

namespace icoheat {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// Environment variable naming the directory that receives `<command>.<ext>`
/// when --out is not given.
inline constexpr const char* kOutputDirEnv = "ICOHEAT_OUTPUT_DIR";

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitConfigError = 2 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { SweepEnergy, Multipass, SteadyState, Cop, SimulateShots, Verify };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Command c);

/// Parses "start:stop:step" (stop included when it lies on the lattice),
/// a comma-separated list, or a single number. Every value must lie in
/// (0, 0.5); the error names the offending bound. Lattice points are
/// rounded to 12 decimals.
std::vector<double> parse_grid(std::string_view text);

struct RunConfig {
  Command command = Command::SweepEnergy;
  std::vector<double> e_c;
  int steps = 10;
  double visibility = 1.0;
  BetaResetRule beta_reset = BetaResetRule::equal_cold();
  std::uint64_t shots = 100000;
  std::string seed = "0";
  ControlBasis basis = ControlBasis::PlusMinus;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> out_path;
};

/// Throws ConfigError for out-of-range parameters.
void validate(const RunConfig& cfg);

using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  std::string command;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// `#`-prefixed metadata lines, one header line, then rows. Doubles use 17
/// significant digits.
void write_csv(const Table& t, std::ostream& os);

/// {"schema_version", "command", "metadata", "columns", "rows"}; each row is
/// an object keyed by column name, non-finite numbers become null.
void write_json(const Table& t, std::ostream& os);

Table cmd_sweep_energy(const RunConfig& cfg);
Table cmd_multipass(const RunConfig& cfg);
Table cmd_steady_state(const RunConfig& cfg);
Table cmd_cop(const RunConfig& cfg);
Table cmd_simulate_shots(const RunConfig& cfg);

struct VerifyCheck {
  std::string name;
  double residual;
  double tolerance;
  bool passed;
};

/// Invariant suite. `closed_form_visibility` is fed to the closed form in the
/// closed-form-vs-Kraus-sum check only; anything but 1 must fail it.
std::vector<VerifyCheck> run_verification(double closed_form_visibility = 1.0);
Table verification_table(const std::vector<VerifyCheck>& checks, double closed_form_visibility);

/// Runs a validated configuration, writing machine output to `out` (or the
/// configured file) and diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command-line entry point; `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icoheat

#endif  // ICOHEAT_COMMANDS_HPP
