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

#ifndef ICOHEAT_CHANNELS_HPP
#define ICOHEAT_CHANNELS_HPP

#include <span>
#include <string>
#include <vector>

#include "icoheat/qubit.hpp"

namespace icoheat {

inline constexpr double kCompletenessTolerance = 1e-12;

/// One term w * K rho K^dag of a Kraus sum. The weight is kept separate from
/// the operator so mixtures of channels stay explicit.
struct WeightedKraus {
  double weight;
  Mat2 op;
};

/// A CPTP map on a qubit, rho -> sum_i w_i K_i rho K_i^dag.
class KrausChannel {
 public:
  /// Throws std::invalid_argument unless every weight is in [0, 1], every
  /// operator is finite, and sum_i w_i K_i^dag K_i = I within
  /// kCompletenessTolerance.
  KrausChannel(std::vector<WeightedKraus> ops, std::string label);

  std::span<const WeightedKraus> ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  const std::string& label() const noexcept { return label_; }

  /// max |sum_i w_i K_i^dag K_i - I|.
  double completeness_error() const;

  /// Equivalent operators sqrt(w_i) K_i, with implicit unit weights.
  std::vector<Mat2> scaled_operators() const;

  /// Image of an arbitrary operator under the map.
  Mat2 apply_to(const Mat2& x) const;

  /// Normalized Choi state (N (x) id)(|Phi+><Phi+|), channel factor first.
  Mat4 choi() const;

 private:
  std::vector<WeightedKraus> ops_;
  std::string label_;
};

double completeness_error(std::span<const WeightedKraus> ops);

KrausChannel identity_channel();

/// Full amplitude damping to |0>: {|0><0|, |0><1|}, both with weight 1.
KrausChannel full_ad_ground();

/// Full amplitude damping to |1>: {|1><1|, |1><0|}, both with weight 1.
KrausChannel full_ad_excited();

/// Mixture of the two full damping channels. The ground pair carries weight
/// 1/Z and the excited pair exp(-beta*omega)/Z, so every input is mapped to
/// thermal_state(spec).
KrausChannel thermalizing_channel(const ThermalSpec& spec);

Qubit apply(const KrausChannel& ch, const Qubit& rho);

/// a o b: b acts first.
KrausChannel compose(const KrausChannel& a, const KrausChannel& b);

/// Uhlmann fidelity between the Choi states of two channels, in [0, 1].
double channel_fidelity(const KrausChannel& a, const KrausChannel& b);

/// Uhlmann fidelity (Tr |sqrt(rho) sqrt(sigma)|)^2 of two 4x4 states.
double state_fidelity(const Mat4& rho, const Mat4& sigma);

}  // namespace icoheat

#endif  // ICOHEAT_CHANNELS_HPP
