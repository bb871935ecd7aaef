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

#ifndef ICOHEAT_THERMO_CYCLE_HPP
#define ICOHEAT_THERMO_CYCLE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icoheat/qubit.hpp"

namespace icoheat {

struct MultipassStep {
  int n;
  double prob_minus;
  /// Absent if the Minus branch vanished (zero-temperature reservoir).
  std::optional<double> e_minus;
  double prob_plus;
  double e_plus;
};

struct MultipassTrajectory {
  ThermalSpec spec;
  double visibility;
  double input_energy;
  std::vector<MultipassStep> steps;
};

/// Feeds the Plus-branch output back into the switch `n_steps` times,
/// starting from the reservoir's thermal state. Step n records both branches
/// of running the switch on the current input.
MultipassTrajectory multipass(const ThermalSpec& spec, int n_steps, double visibility = 1.0);

/// Fixed point of the Plus-branch map on diagonal states diag(1 - x, x).
struct SteadyState {
  ThermalSpec spec;
  double visibility;
  /// Excited population of the fixed point, in [0, e_c].
  double x_star;
  /// Energy of the Minus branch when the switch is fed the fixed point.
  double e_minus_star;
  double prob_minus_star;
};

/// Solves the Plus-branch fixed point in closed form. With T = diag(a, b),
/// c = V(1 - 2b), the fixed point is the smaller root of
///   c x^2 - (1 + c) x + b = 0,
/// evaluated as 2b / ((1 + c) + sqrt((1 + c)^2 - 4cb)) so that b -> 0 and
/// b -> 1/2 stay well conditioned. At e_c = 0 the Minus branch vanishes and
/// e_minus_star is reported as its b -> 0 limit.
SteadyState steady_state(const ThermalSpec& spec, double visibility = 1.0);

/// One diagonal Plus/Minus update of diag(1 - x, x) through the switch.
struct DiagonalBranches {
  double prob_plus;
  double x_plus;
  double prob_minus;
  double x_minus;
};
DiagonalBranches diagonal_switch_step(const ThermalSpec& spec, double x, double visibility = 1.0);

enum class Strategy { Classical, MultiPass };
std::string_view to_string(Strategy s);

/// Inverse temperature of the reservoir used to reset the measurement
/// register. Defaults to the cold reservoir's.
class BetaResetRule {
 public:
  static BetaResetRule equal_cold() { return BetaResetRule(std::nullopt); }
  /// Throws std::invalid_argument unless beta > 0 and finite.
  static BetaResetRule explicit_value(double beta);

  double resolve(const ThermalSpec& cold) const;
  bool is_equal_cold() const noexcept { return !beta_; }
  std::string describe() const;

 private:
  explicit BetaResetRule(std::optional<double> beta) : beta_(beta) {}
  std::optional<double> beta_;
};

/// Per-cycle bookkeeping of the refrigerator for one strategy.
struct CycleReport {
  ThermalSpec spec_cold;
  ThermalSpec spec_hot;
  double beta_reset;
  Strategy strategy;
  double p_minus;
  double e_minus;
  /// Heat drawn inside the switch, e_minus - E_C.
  double dE1;
  /// Heat from re-thermalizing after the hot contact, -(E_H - E_C).
  double dE2;
  double dE;
  /// p+ ln p+ + p- ln p-, in nats (non-positive).
  double entropy_S;
  /// Landauer cost of erasing the register, -S / beta_reset.
  double dW;
  /// Mean number of switch uses per successful cycle, 1 / p-.
  double n_bar;
  double eta;
};

/// Classical strategy evaluates the Minus branch on the cold thermal state;
/// MultiPass evaluates it at the steady state. Throws std::invalid_argument
/// for beta_reset <= 0, e_c = 0, or reservoirs with different energy gaps.
CycleReport cycle_report(const ThermalSpec& cold, const ThermalSpec& hot, double beta_reset,
                         Strategy strategy);
CycleReport cycle_report(const ThermalSpec& cold, double beta_reset, Strategy strategy);

/// One report per grid point, with the hot reservoir equal to the cold one.
std::vector<CycleReport> cop_sweep(std::span<const double> e_c_grid, const BetaResetRule& rule,
                                   Strategy strategy, const Hamiltonian& h = Hamiltonian{});

/// p ln p with 0 ln 0 = 0.
double xlogx(double p);

}  // namespace icoheat

#endif  // ICOHEAT_THERMO_CYCLE_HPP
