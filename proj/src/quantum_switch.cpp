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

#include "icoheat/quantum_switch.hpp"

#include <algorithm>
#include <cmath>

namespace icoheat {

namespace {

Mat2 projector(int level) {
  Mat2 p = Mat2::Zero();
  p(level, level) = 1.0;
  return p;
}

void check_visibility(double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument("visibility must be in [0, 1], got " + std::to_string(v));
  }
}

}  // namespace

std::string_view to_string(ControlOutcome o) {
  switch (o) {
    case ControlOutcome::Plus: return "plus";
    case ControlOutcome::Minus: return "minus";
    case ControlOutcome::Zero: return "zero";
    case ControlOutcome::One: return "one";
  }
  return "?";
}

std::string_view to_string(ControlBasis b) {
  return b == ControlBasis::PlusMinus ? "plus-minus" : "computational";
}

std::array<ControlOutcome, 2> outcomes_of(ControlBasis b) {
  if (b == ControlBasis::PlusMinus) return {ControlOutcome::Plus, ControlOutcome::Minus};
  return {ControlOutcome::Zero, ControlOutcome::One};
}

Ket2 control_ket(ControlOutcome o) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (o) {
    case ControlOutcome::Plus: return Ket2(s, s);
    case ControlOutcome::Minus: return Ket2(s, -s);
    case ControlOutcome::Zero: return Ket2(1.0, 0.0);
    case ControlOutcome::One: return Ket2(0.0, 1.0);
  }
  throw std::invalid_argument("unknown control outcome");
}

Qubit plus_state() { return pure_state(control_ket(ControlOutcome::Plus)); }

std::vector<WeightedKraus4> switch_kraus(const KrausChannel& first, const KrausChannel& second) {
  std::vector<WeightedKraus4> out;
  out.reserve(first.size() * second.size());
  for (const auto& k1 : first.ops()) {
    for (const auto& k2 : second.ops()) {
      const Mat4 m = kron(projector(0), k1.op * k2.op) + kron(projector(1), k2.op * k1.op);
      out.push_back({k1.weight * k2.weight, m});
    }
  }
  return out;
}

double completeness_error(std::span<const WeightedKraus4> ops) {
  Mat4 acc = Mat4::Zero();
  for (const auto& m : ops) acc += m.weight * m.op.adjoint() * m.op;
  return max_abs(acc - Mat4::Identity());
}

Mat4 apply_switch(std::span<const WeightedKraus4> ops, const Mat4& x) {
  Mat4 out = Mat4::Zero();
  for (const auto& m : ops) out += m.weight * m.op * x * m.op.adjoint();
  return out;
}

Joint brute_force_switch(const ThermalSpec& spec, const Qubit& rho, const Qubit& control) {
  const auto ch = thermalizing_channel(spec);
  const auto family = switch_kraus(ch, ch);
  return Joint(apply_switch(family, kron(control.matrix(), rho.matrix())));
}

Joint closed_form_switch(const ThermalSpec& spec, const Qubit& rho, const Qubit& control,
                         double visibility) {
  check_visibility(visibility);
  const Mat2 t = thermal_state(spec).matrix();
  const Mat2 cross = t * rho.matrix() * t;
  const Mat2& c = control.matrix();
  Mat4 joint;
  joint.block<2, 2>(0, 0) = c(0, 0) * t;
  joint.block<2, 2>(2, 2) = c(1, 1) * t;
  joint.block<2, 2>(0, 2) = visibility * c(0, 1) * cross;
  joint.block<2, 2>(2, 0) = visibility * c(1, 0) * cross.adjoint();
  return Joint(joint);
}

SwitchOutput run_switch(const ThermalSpec& spec, const Qubit& rho, const Qubit& control,
                        double visibility) {
  SwitchOutput out{closed_form_switch(spec, rho, control, visibility), {}, visibility};
  for (const auto o : kAllOutcomes) {
    try {
      auto b = partial_trace_system(out.joint, control_ket(o));
      out.branches.emplace(o, BranchRecord{b.probability, std::move(b.state)});
    } catch (const VanishingBranch& e) {
      out.branches.emplace(o, BranchRecord{std::max(e.probability(), 0.0), std::nullopt});
    }
  }
  return out;
}

SwitchOutput run_switch(const ThermalSpec& spec, const Qubit& rho, double visibility) {
  return run_switch(spec, rho, plus_state(), visibility);
}

EnergyChange branch_energy_change(const SwitchOutput& out, const Qubit& rho_in,
                                  const Hamiltonian& h, ControlOutcome o) {
  const auto& b = out.branch(o);
  if (!b.state) throw VanishingBranch(b.probability);
  const double de = energy(*b.state, h) - energy(rho_in, h);
  return {de, b.probability * de};
}

std::map<ControlOutcome, EnergyChange> branch_energy_change(const SwitchOutput& out,
                                                            const Qubit& rho_in,
                                                            const Hamiltonian& h) {
  std::map<ControlOutcome, EnergyChange> result;
  for (const auto& [o, b] : out.branches) {
    if (b.state) result.emplace(o, branch_energy_change(out, rho_in, h, o));
  }
  return result;
}

}  // namespace icoheat
