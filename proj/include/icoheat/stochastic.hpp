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

#ifndef ICOHEAT_STOCHASTIC_HPP
#define ICOHEAT_STOCHASTIC_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "icoheat/quantum_switch.hpp"

namespace icoheat {

/// Generator used for every shot stream: std::mt19937_64 seeded through
/// splitmix64, with uniforms taken from the top 53 bits of each draw.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/splitmix64";

enum class EnergyLevel { Ground = 0, Excited = 1 };

struct OutcomeEstimate {
  std::uint64_t count;
  /// Excited-state fraction among shots with this control outcome.
  double e_hat;
  /// Binomial standard error sqrt(e_hat (1 - e_hat) / count).
  double std_err;
};

struct ShotSample {
  std::uint64_t shots;
  std::uint64_t seed;
  ControlBasis basis;
  std::array<ControlOutcome, 2> outcomes;
  /// counts[i][level] for outcome outcomes[i].
  std::array<std::array<std::uint64_t, 2>, 2> counts;
  /// Absent when the outcome was never observed.
  std::map<ControlOutcome, std::optional<OutcomeEstimate>> estimates;

  std::uint64_t count(ControlOutcome o, EnergyLevel level) const;
  std::uint64_t outcome_count(ControlOutcome o) const;
};

/// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of grid point `index`, independent of evaluation order.
std::uint64_t derive_point_seed(std::uint64_t master, std::uint64_t index);

/// Accepts decimal or 0x-prefixed hexadecimal. Throws std::invalid_argument.
std::uint64_t parse_seed(std::string_view text);

/// Joint distribution P(outcome, level) = p(outcome) <level|cond|level>,
/// indexed [outcome][level] in outcomes_of(basis) order.
std::array<std::array<double, 2>, 2> measurement_distribution(const ThermalSpec& spec,
                                                             const Qubit& rho, double visibility,
                                                             ControlBasis basis);

/// Draws `shots` independent (control outcome, energy level) pairs from the
/// exact measurement distribution. Throws std::invalid_argument for
/// shots = 0.
ShotSample sample_switch(const ThermalSpec& spec, const Qubit& rho, double visibility,
                         std::uint64_t shots, std::uint64_t seed,
                         ControlBasis basis = ControlBasis::PlusMinus);

enum class Execution { Serial, Parallel };

/// Samples each grid point with its reservoir thermal state as input, using
/// derive_point_seed(seed, index). Output order follows the grid.
std::vector<ShotSample> sample_sweep(std::span<const double> e_c_grid, std::uint64_t shots,
                                     std::uint64_t seed, double visibility = 1.0,
                                     ControlBasis basis = ControlBasis::PlusMinus,
                                     Execution execution = Execution::Serial);

}  // namespace icoheat

#endif  // ICOHEAT_STOCHASTIC_HPP
