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

#include "icoheat/thermo_cycle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "icoheat/quantum_switch.hpp"

namespace icoheat {

namespace {

void check_visibility(double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument("visibility must be in [0, 1], got " + std::to_string(v));
  }
}

void check_same_gap(const ThermalSpec& a, const ThermalSpec& b) {
  const double ga = a.hamiltonian().omega();
  if (std::abs(ga - b.hamiltonian().omega()) > 1e-15 * ga) {
    throw std::invalid_argument("reservoirs must share one energy gap");
  }
}

}  // namespace

MultipassTrajectory multipass(const ThermalSpec& spec, int n_steps, double visibility) {
  if (n_steps < 1) throw std::invalid_argument("multipass needs at least one step");
  check_visibility(visibility);
  const Hamiltonian& h = spec.hamiltonian();
  Qubit current = thermal_state(spec);
  MultipassTrajectory traj{spec, visibility, energy(current, h), {}};
  traj.steps.reserve(static_cast<std::size_t>(n_steps));
  for (int n = 1; n <= n_steps; ++n) {
    const SwitchOutput out = run_switch(spec, current, visibility);
    const auto& plus = out.branch(ControlOutcome::Plus);
    const auto& minus = out.branch(ControlOutcome::Minus);
    if (!plus.state) throw VanishingBranch(plus.probability);
    MultipassStep step{n, minus.probability, std::nullopt, plus.probability,
                       energy(*plus.state, h)};
    if (minus.state) step.e_minus = energy(*minus.state, h);
    traj.steps.push_back(step);
    current = *plus.state;
  }
  return traj;
}

DiagonalBranches diagonal_switch_step(const ThermalSpec& spec, double x, double visibility) {
  check_visibility(visibility);
  const double a = spec.ground_population();
  const double b = spec.e_c();
  // Tr(T rho T) and <1|T rho T|1> for rho = diag(1 - x, x).
  const double overlap = a * a * (1.0 - x) + b * b * x;
  const double cross_excited = b * b * x;
  DiagonalBranches out{};
  out.prob_plus = 0.5 * (1.0 + visibility * overlap);
  out.x_plus = (b + visibility * cross_excited) / (1.0 + visibility * overlap);
  out.prob_minus = 0.5 * (1.0 - visibility * overlap);
  const double denom = 1.0 - visibility * overlap;
  out.x_minus = denom > 0.0 ? (b - visibility * cross_excited) / denom
                            : std::numeric_limits<double>::quiet_NaN();
  return out;
}

SteadyState steady_state(const ThermalSpec& spec, double visibility) {
  check_visibility(visibility);
  const double b = spec.e_c();
  const double c = visibility * (1.0 - 2.0 * b);
  const double disc = (1.0 + c) * (1.0 + c) - 4.0 * c * b;
  const double x = 2.0 * b / ((1.0 + c) + std::sqrt(disc));
  const double omega = spec.hamiltonian().omega();
  const auto branches = diagonal_switch_step(spec, x, visibility);
  SteadyState ss{spec, visibility, x, branches.x_minus * omega, branches.prob_minus};
  if (spec.is_zero_temperature() && visibility == 1.0) {
    // Minus branch vanishes. As b -> 0, x* ~ b/2 and its unnormalized
    // weight ~ 5b/2 against an excited part ~ b, so the limit is 2/5.
    ss.e_minus_star = 0.4 * omega;
  }
  return ss;
}

std::string_view to_string(Strategy s) {
  return s == Strategy::Classical ? "classical" : "multi-pass";
}

BetaResetRule BetaResetRule::explicit_value(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("reset inverse temperature must be positive and finite");
  }
  return BetaResetRule(beta);
}

double BetaResetRule::resolve(const ThermalSpec& cold) const {
  return beta_ ? *beta_ : cold.beta();
}

std::string BetaResetRule::describe() const {
  if (!beta_) return "equal-cold";
  std::ostringstream s;
  s.precision(17);
  s << "explicit:" << *beta_;
  return s.str();
}

double xlogx(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

CycleReport cycle_report(const ThermalSpec& cold, const ThermalSpec& hot, double beta_reset,
                         Strategy strategy) {
  if (!(beta_reset > 0.0) || !std::isfinite(beta_reset)) {
    throw std::invalid_argument("reset inverse temperature must be positive and finite");
  }
  if (cold.is_zero_temperature()) {
    throw std::invalid_argument("refrigerator cycle is undefined for a zero-temperature reservoir");
  }
  check_same_gap(cold, hot);
  const Hamiltonian& h = cold.hamiltonian();

  double p_minus = 0.0;
  double e_minus = 0.0;
  if (strategy == Strategy::Classical) {
    const Qubit t = thermal_state(cold);
    const SwitchOutput out = run_switch(cold, t);
    const auto& minus = out.branch(ControlOutcome::Minus);
    if (!minus.state) throw VanishingBranch(minus.probability);
    p_minus = minus.probability;
    e_minus = energy(*minus.state, h);
  } else {
    const SteadyState ss = steady_state(cold);
    p_minus = ss.prob_minus_star;
    e_minus = ss.e_minus_star;
  }
  if (!(p_minus >= kVanishingProbability)) throw VanishingBranch(p_minus);

  CycleReport r{cold, hot, beta_reset, strategy, p_minus, e_minus, 0, 0, 0, 0, 0, 0, 0};
  const double p_plus = 1.0 - p_minus;
  r.dE1 = e_minus - cold.reservoir_energy();
  r.dE2 = -(hot.reservoir_energy() - cold.reservoir_energy());
  r.dE = r.dE1 + r.dE2;
  r.entropy_S = xlogx(p_plus) + xlogx(p_minus);
  r.dW = -r.entropy_S / beta_reset;
  r.n_bar = 1.0 / p_minus;
  r.eta = r.dE / (r.n_bar * r.dW);
  return r;
}

CycleReport cycle_report(const ThermalSpec& cold, double beta_reset, Strategy strategy) {
  return cycle_report(cold, cold, beta_reset, strategy);
}

std::vector<CycleReport> cop_sweep(std::span<const double> e_c_grid, const BetaResetRule& rule,
                                   Strategy strategy, const Hamiltonian& h) {
  std::vector<CycleReport> out;
  out.reserve(e_c_grid.size());
  for (const double e_c : e_c_grid) {
    if (!(e_c > 0.0 && e_c < 0.5)) {
      throw std::invalid_argument("grid value " + std::to_string(e_c) + " is outside (0, 0.5)");
    }
    const auto cold = ThermalSpec::from_excited_population(e_c, h);
    out.push_back(cycle_report(cold, rule.resolve(cold), strategy));
  }
  return out;
}

}  // namespace icoheat
