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

#ifndef ICOHEAT_QUANTUM_SWITCH_HPP
#define ICOHEAT_QUANTUM_SWITCH_HPP

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "icoheat/channels.hpp"
#include "icoheat/qubit.hpp"

namespace icoheat {

/// Control-qubit measurement outcome. Plus/Minus are (|0> +- |1>)/sqrt(2);
/// Zero/One are the computational basis.
enum class ControlOutcome { Plus, Minus, Zero, One };

enum class ControlBasis { PlusMinus, Computational };

inline constexpr std::array<ControlOutcome, 4> kAllOutcomes = {
    ControlOutcome::Plus, ControlOutcome::Minus, ControlOutcome::Zero, ControlOutcome::One};

std::string_view to_string(ControlOutcome o);
std::string_view to_string(ControlBasis b);

/// The two outcomes of a control basis, in the order {Plus, Minus} or {Zero, One}.
std::array<ControlOutcome, 2> outcomes_of(ControlBasis b);

Ket2 control_ket(ControlOutcome o);

/// |+><+|, the control state that superposes both orders.
Qubit plus_state();

struct WeightedKraus4 {
  double weight;
  Mat4 op;
};

/// Switch Kraus family M_ij = |0><0|_c (x) K1_i K2_j + |1><1|_c (x) K2_j K1_i,
/// weighted w1_i * w2_j. Control |0> applies `second` then `first`; control
/// |1> applies `first` then `second`. When both channels are a single
/// operator the family has one member.
std::vector<WeightedKraus4> switch_kraus(const KrausChannel& first, const KrausChannel& second);

/// max |sum w M^dag M - I| over a 4x4 family.
double completeness_error(std::span<const WeightedKraus4> ops);

/// sum_ij w_ij M_ij X M_ij^dag.
Mat4 apply_switch(std::span<const WeightedKraus4> ops, const Mat4& x);

/// Joint output obtained by summing the 16-term Kraus family of two
/// thermalizing channels at the same temperature.
Joint brute_force_switch(const ThermalSpec& spec, const Qubit& rho, const Qubit& control);

/// Joint output from the closed form: diagonal control blocks carry T, the
/// off-diagonal control blocks carry visibility * T rho T. With control
/// |+><+| this is 1/2[(|0><0|+|1><1|) (x) T + V(|0><1|+|1><0|) (x) T rho T].
Joint closed_form_switch(const ThermalSpec& spec, const Qubit& rho, const Qubit& control,
                         double visibility = 1.0);

struct BranchRecord {
  double probability;
  /// Absent when the probability is below kVanishingProbability.
  std::optional<Qubit> state;
};

struct SwitchOutput {
  Joint joint;
  std::map<ControlOutcome, BranchRecord> branches;
  double visibility;

  const BranchRecord& branch(ControlOutcome o) const { return branches.at(o); }
};

/// Runs the switch with both slots thermalizing at `spec` and records all
/// four post-selected branches. Throws std::invalid_argument for a
/// visibility outside [0, 1].
SwitchOutput run_switch(const ThermalSpec& spec, const Qubit& rho, const Qubit& control,
                        double visibility = 1.0);
SwitchOutput run_switch(const ThermalSpec& spec, const Qubit& rho, double visibility = 1.0);

struct EnergyChange {
  double dE;
  double dE_weighted;
};

/// Energy change of one branch relative to the input. Throws VanishingBranch
/// when the branch is absent.
EnergyChange branch_energy_change(const SwitchOutput& out, const Qubit& rho_in,
                                  const Hamiltonian& h, ControlOutcome o);

/// Energy changes of every branch present in `out`.
std::map<ControlOutcome, EnergyChange> branch_energy_change(const SwitchOutput& out,
                                                            const Qubit& rho_in,
                                                            const Hamiltonian& h);

}  // namespace icoheat

#endif  // ICOHEAT_QUANTUM_SWITCH_HPP
