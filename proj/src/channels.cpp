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

#include "icoheat/channels.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace icoheat {

namespace {

Mat2 outer(int row, int col) {
  Mat2 m = Mat2::Zero();
  m(row, col) = 1.0;
  return m;
}

/// Positive square root of a Hermitian PSD matrix. Eigenvalues below
/// `floor` are treated as exact zeros so roundoff does not leak in as
/// sqrt(eps)-sized contributions.
Mat4 psd_sqrt(const Mat4& m, double floor) {
  Eigen::SelfAdjointEigenSolver<Mat4> solver(0.5 * (m + m.adjoint()));
  Eigen::Vector4d ev = solver.eigenvalues();
  for (int i = 0; i < 4; ++i) ev(i) = ev(i) > floor ? std::sqrt(ev(i)) : 0.0;
  return solver.eigenvectors() * ev.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

}  // namespace

double completeness_error(std::span<const WeightedKraus> ops) {
  Mat2 acc = Mat2::Zero();
  for (const auto& k : ops) acc += k.weight * k.op.adjoint() * k.op;
  return max_abs(acc - Mat2::Identity());
}

KrausChannel::KrausChannel(std::vector<WeightedKraus> ops, std::string label)
    : ops_(std::move(ops)), label_(std::move(label)) {
  if (ops_.empty()) throw std::invalid_argument("channel '" + label_ + "' has no Kraus operators");
  for (const auto& k : ops_) {
    if (!(k.weight >= 0.0 && k.weight <= 1.0)) {
      throw std::invalid_argument("channel '" + label_ + "' has a weight outside [0, 1]");
    }
    if (!k.op.allFinite()) {
      throw std::invalid_argument("channel '" + label_ + "' has a non-finite Kraus operator");
    }
  }
  if (const double err = icoheat::completeness_error(ops_); err > kCompletenessTolerance) {
    throw std::invalid_argument("channel '" + label_ + "' is not trace preserving (residual " +
                                std::to_string(err) + ")");
  }
}

double KrausChannel::completeness_error() const { return icoheat::completeness_error(ops_); }

std::vector<Mat2> KrausChannel::scaled_operators() const {
  std::vector<Mat2> out;
  out.reserve(ops_.size());
  for (const auto& k : ops_) out.push_back(std::sqrt(k.weight) * k.op);
  return out;
}

Mat2 KrausChannel::apply_to(const Mat2& x) const {
  Mat2 out = Mat2::Zero();
  for (const auto& k : ops_) out += k.weight * k.op * x * k.op.adjoint();
  return out;
}

Mat4 KrausChannel::choi() const {
  // J = 1/2 sum_ab N(|a><b|) (x) |a><b|
  Mat4 j = Mat4::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      j += 0.5 * kron(apply_to(outer(a, b)), outer(a, b));
    }
  }
  return j;
}

KrausChannel identity_channel() { return KrausChannel({{1.0, Mat2::Identity()}}, "identity"); }

KrausChannel full_ad_ground() {
  return KrausChannel({{1.0, outer(0, 0)}, {1.0, outer(0, 1)}}, "full_ad_ground");
}

KrausChannel full_ad_excited() {
  return KrausChannel({{1.0, outer(1, 1)}, {1.0, outer(1, 0)}}, "full_ad_excited");
}

KrausChannel thermalizing_channel(const ThermalSpec& spec) {
  const double q = spec.ground_population();
  const double r = spec.e_c();
  return KrausChannel(
      {{q, outer(0, 0)}, {q, outer(0, 1)}, {r, outer(1, 1)}, {r, outer(1, 0)}},
      "thermalizing(e_c=" + std::to_string(spec.e_c()) + ")");
}

Qubit apply(const KrausChannel& ch, const Qubit& rho) { return Qubit(ch.apply_to(rho.matrix())); }

KrausChannel compose(const KrausChannel& a, const KrausChannel& b) {
  std::vector<WeightedKraus> ops;
  ops.reserve(a.size() * b.size());
  for (const auto& ka : a.ops()) {
    for (const auto& kb : b.ops()) ops.push_back({ka.weight * kb.weight, ka.op * kb.op});
  }
  return KrausChannel(std::move(ops), a.label() + " o " + b.label());
}

double state_fidelity(const Mat4& rho, const Mat4& sigma) {
  constexpr double kFloor = 1e-14;
  const Mat4 prod = psd_sqrt(rho, kFloor) * psd_sqrt(sigma, kFloor);
  Eigen::JacobiSVD<Mat4> svd(prod);
  const double nuclear = svd.singularValues().sum();
  return std::clamp(nuclear * nuclear, 0.0, 1.0);
}

double channel_fidelity(const KrausChannel& a, const KrausChannel& b) {
  return state_fidelity(a.choi(), b.choi());
}

}  // namespace icoheat
