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

#include "icoheat/stochastic.hpp"

#include <charconv>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <string>

namespace icoheat {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t ShotSample::count(ControlOutcome o, EnergyLevel level) const {
  for (int i = 0; i < 2; ++i) {
    if (outcomes[i] == o) return counts[i][static_cast<int>(level)];
  }
  throw std::invalid_argument("outcome not in the sampled basis");
}

std::uint64_t ShotSample::outcome_count(ControlOutcome o) const {
  return count(o, EnergyLevel::Ground) + count(o, EnergyLevel::Excited);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_point_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index));
}

std::uint64_t parse_seed(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  }
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value, base);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("seed must be a decimal or 0x-prefixed hex 64-bit integer");
  }
  return value;
}

std::array<std::array<double, 2>, 2> measurement_distribution(const ThermalSpec& spec,
                                                             const Qubit& rho, double visibility,
                                                             ControlBasis basis) {
  const SwitchOutput out = run_switch(spec, rho, visibility);
  std::array<std::array<double, 2>, 2> dist{};
  const auto outcomes = outcomes_of(basis);
  for (int i = 0; i < 2; ++i) {
    const auto& b = out.branch(outcomes[i]);
    if (!b.state) continue;
    dist[i][0] = b.probability * b.state->population(0);
    dist[i][1] = b.probability * b.state->population(1);
  }
  return dist;
}

ShotSample sample_switch(const ThermalSpec& spec, const Qubit& rho, double visibility,
                         std::uint64_t shots, std::uint64_t seed, ControlBasis basis) {
  if (shots == 0) throw std::invalid_argument("shots must be at least 1");
  const auto dist = measurement_distribution(spec, rho, visibility, basis);
  const double total = dist[0][0] + dist[0][1] + dist[1][0] + dist[1][1];
  const std::array<double, 3> cumulative = {dist[0][0] / total,
                                            (dist[0][0] + dist[0][1]) / total,
                                            (dist[0][0] + dist[0][1] + dist[1][0]) / total};

  ShotSample s{shots, seed, basis, outcomes_of(basis), {}, {}};
  std::mt19937_64 rng(splitmix64(seed));
  for (std::uint64_t k = 0; k < shots; ++k) {
    const double u = uniform01(rng);
    if (u < cumulative[0]) {
      ++s.counts[0][0];
    } else if (u < cumulative[1]) {
      ++s.counts[0][1];
    } else if (u < cumulative[2]) {
      ++s.counts[1][0];
    } else {
      ++s.counts[1][1];
    }
  }
  for (int i = 0; i < 2; ++i) {
    const std::uint64_t n = s.counts[i][0] + s.counts[i][1];
    if (n == 0) {
      s.estimates.emplace(s.outcomes[i], std::nullopt);
      continue;
    }
    const double p = static_cast<double>(s.counts[i][1]) / static_cast<double>(n);
    s.estimates.emplace(s.outcomes[i],
                        OutcomeEstimate{n, p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))});
  }
  return s;
}

std::vector<ShotSample> sample_sweep(std::span<const double> e_c_grid, std::uint64_t shots,
                                     std::uint64_t seed, double visibility, ControlBasis basis,
                                     Execution execution) {
  auto point = [&](std::size_t i) {
    const auto spec = ThermalSpec::from_excited_population(e_c_grid[i]);
    return sample_switch(spec, thermal_state(spec), visibility, shots, derive_point_seed(seed, i),
                         basis);
  };
  std::vector<ShotSample> out;
  out.reserve(e_c_grid.size());
  if (execution == Execution::Serial) {
    for (std::size_t i = 0; i < e_c_grid.size(); ++i) out.push_back(point(i));
    return out;
  }
  std::vector<std::future<ShotSample>> pending;
  pending.reserve(e_c_grid.size());
  for (std::size_t i = 0; i < e_c_grid.size(); ++i) {
    pending.push_back(std::async(std::launch::async, point, i));
  }
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace icoheat
