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

#include "icoheat/qubit.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "icoheat/channels.hpp"
#include "icoheat/quantum_switch.hpp"
#include "test_support.hpp"

using namespace icoheat;
using icoheat::testing::diag2;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Ket2 ket_plus() { return Ket2(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)); }

}  // namespace

TEST(qubit, RejectsInvalidDensityMatrices) {
  Mat2 not_hermitian = diag2(0.5, 0.5);
  not_hermitian(0, 1) = 0.1;
  EXPECT_THROW(Qubit{not_hermitian}, std::invalid_argument);
  EXPECT_THROW(Qubit{diag2(0.6, 0.5)}, std::invalid_argument);
  EXPECT_THROW(Qubit{diag2(1.2, -0.2)}, std::invalid_argument);
  Mat2 nan = diag2(0.5, 0.5);
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(Qubit{nan}, std::invalid_argument);
  Mat4 neg = Mat4::Zero();
  neg(0, 0) = 1.1;
  neg(1, 1) = -0.1;
  EXPECT_THROW(Joint{neg}, std::invalid_argument);
}

TEST(qubit, AcceptsRoundoffWithinTolerance) {
  Mat2 m = diag2(0.5 + 5e-13, 0.5 - 5e-13);
  m(0, 1) = 4e-13;
  EXPECT_NO_THROW(Qubit{m});
}

TEST(qubit, ClosedFormEigenvaluesMatchSolver) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Mat2 rho = icoheat::testing::random_density_any(rng);
    const auto ev = hermitian_eigenvalues(rho);
    Mat4 padded = Mat4::Zero();
    padded.block<2, 2>(0, 0) = rho;
    const auto ev4 = hermitian_eigenvalues(padded);
    EXPECT_NEAR(ev[0], ev4[2], 1e-12);
    EXPECT_NEAR(ev[1], ev4[3], 1e-12);
  }
}

TEST(qubit, ThermalSpecRejectsBadTemperatures) {
  EXPECT_THROW(ThermalSpec::from_beta(0.0), std::invalid_argument);
  EXPECT_THROW(ThermalSpec::from_beta(-1.0), std::invalid_argument);
  EXPECT_THROW(ThermalSpec::from_beta(std::nan("")), std::invalid_argument);
  EXPECT_THROW(ThermalSpec::from_excited_population(0.5), std::invalid_argument);
  EXPECT_THROW(ThermalSpec::from_excited_population(-0.01), std::invalid_argument);
  EXPECT_THROW(Hamiltonian(0.0), std::invalid_argument);
  EXPECT_NO_THROW(ThermalSpec::from_beta(kInf));
}

TEST(qubit, ThermalStateZeroTemperatureIsGround) {
  const auto t = thermal_state(ThermalSpec::from_beta(kInf));
  EXPECT_EQ(t(0, 0), Complex(1.0));
  EXPECT_EQ(t(1, 1), Complex(0.0));
  EXPECT_EQ(ThermalSpec::from_excited_population(0.0).beta(), kInf);
}

TEST(qubit, ThermalStateInfiniteTemperatureLimit) {
  const auto t = thermal_state(ThermalSpec::from_excited_population(0.5 - 1e-14));
  EXPECT_NEAR(t.population(0), 0.5, 1e-13);
  EXPECT_NEAR(t.population(1), 0.5, 1e-13);
}

TEST(qubit, ThermalStateAtLogThree) {
  // e^{-ln 3} = 1/3, Z = 4/3.
  const long double z = 1.0L + 1.0L / 3.0L;
  const auto t = thermal_state(ThermalSpec::from_beta(std::log(3.0)));
  EXPECT_NEAR(t.population(0), static_cast<double>(1.0L / z), 1e-15);
  EXPECT_NEAR(t.population(1), static_cast<double>((1.0L / 3.0L) / z), 1e-15);
  EXPECT_NEAR(t.population(1), 0.25, 1e-15);
  EXPECT_EQ(t(0, 1), Complex(0.0));
}

TEST(qubit, ThermalStateUsesGap) {
  const Hamiltonian h(2.0);
  const auto spec = ThermalSpec::from_beta(0.5 * std::log(3.0), h);
  EXPECT_NEAR(spec.e_c(), 0.25, 1e-15);
  EXPECT_NEAR(energy(thermal_state(spec, h), h), 0.5, 1e-15);
  EXPECT_THROW(thermal_state(spec, Hamiltonian(1.0)), std::invalid_argument);
  EXPECT_NEAR(spec.partition_function(), 4.0 / 3.0, 1e-15);
}

TEST(qubit, BetaExcitedPopulationRoundTrip) {
  for (double beta = 1e-6; beta <= 50.0; beta *= 1.37) {
    const auto spec = ThermalSpec::from_beta(beta);
    const double back = ThermalSpec::from_excited_population(spec.e_c()).beta();
    EXPECT_NEAR(back, beta, 1e-12 * std::max(1.0, beta)) << "beta=" << beta;
  }
  const double back = ThermalSpec::from_excited_population(ThermalSpec::from_beta(50.0).e_c()).beta();
  EXPECT_NEAR(back, 50.0, 1e-12 * 50.0);
}

TEST(qubit, ExcitedPopulationDecreasesInBeta) {
  double prev = 0.5;
  for (double beta = 1e-3; beta < 40.0; beta += 0.05) {
    const double e = ThermalSpec::from_beta(beta).e_c();
    EXPECT_LT(e, prev);
    prev = e;
  }
}

TEST(qubit, EnergyExamples) {
  const Hamiltonian h1(1.0);
  EXPECT_EQ(energy(Qubit(diag2(1, 0)), h1), 0.0);
  EXPECT_DOUBLE_EQ(energy(Qubit(diag2(0.75, 0.25)), h1), 0.25);
  EXPECT_DOUBLE_EQ(energy(Qubit(diag2(0.5, 0.5)), Hamiltonian(2.0)), 1.0);
}

TEST(qubit, EnergyOfThermalStateIsReservoirEnergy) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const Hamiltonian h(std::uniform_real_distribution<double>(0.1, 5.0)(rng));
    const auto spec = ThermalSpec::from_excited_population(icoheat::testing::random_e_c(rng, 0, 0.4999), h);
    EXPECT_NEAR(energy(thermal_state(spec), h), spec.e_c() * h.omega(), 1e-12);
  }
}

TEST(qubit, TensorExamples) {
  const Qubit zero(diag2(1, 0));
  const auto j = tensor(zero, zero);
  Mat4 expect = Mat4::Zero();
  expect(0, 0) = 1.0;
  EXPECT_LT(max_abs(Mat4(j.matrix() - expect)), 1e-15);

  const Qubit mixed(diag2(0.5, 0.5));
  EXPECT_LT(max_abs(Mat4(tensor(mixed, mixed).matrix() - 0.25 * Mat4::Identity())), 1e-15);

  // |+><+| (x) diag(3/4, 1/4): every control block is diag(3/8, 1/8).
  const auto jp = tensor(pure_state(ket_plus()), Qubit(diag2(0.75, 0.25)));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Mat2 blk = control_block(jp.matrix(), a, b);
      EXPECT_NEAR(blk(0, 0).real(), 0.375, 1e-15);
      EXPECT_NEAR(blk(1, 1).real(), 0.125, 1e-15);
      EXPECT_NEAR(std::abs(blk(0, 1)), 0.0, 1e-15);
    }
  }
}

TEST(qubit, PartialTraceOfProductState) {
  const Qubit rho(diag2(0.75, 0.25));
  const auto joint = tensor(Qubit(diag2(1, 0)), rho);
  const auto b = partial_trace_system(joint, Ket2(1, 0));
  EXPECT_NEAR(b.probability, 1.0, 1e-15);
  EXPECT_LT(max_abs(Mat2(b.state.matrix() - rho.matrix())), 1e-15);
  EXPECT_THROW(partial_trace_system(joint, Ket2(0, 1)), VanishingBranch);
  EXPECT_THROW(partial_trace_system(joint, Ket2(1, 1)), std::invalid_argument);
}

TEST(qubit, PartialTraceOfSwitchOutputMinusBranch) {
  const double e_c = 0.25;
  const Mat2 t = diag2(0.75, 0.25);
  const Joint joint(icoheat::testing::oracle_switch_joint(e_c, t, icoheat::testing::plus_projector_density()));
  const auto b = partial_trace_system(joint, control_ket(ControlOutcome::Minus));
  EXPECT_NEAR(b.probability, 9.0 / 32.0, 1e-15);
  EXPECT_NEAR(b.state.population(0), 7.0 / 12.0, 1e-14);
  EXPECT_NEAR(b.state.population(1), 5.0 / 12.0, 1e-14);
}

// Property: random valid inputs produce valid outputs and orthonormal
// projections sum to one.
TEST(qubit, PropertyOutputsAreValidStates) {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 300; ++k) {
    const Qubit a(icoheat::testing::random_density_any(rng));
    const Qubit b(icoheat::testing::random_density_any(rng));
    const Joint j = tensor(a, b);
    EXPECT_TRUE(density_matrix_violation(j.matrix()).empty());
    const Joint mixed(0.5 * j.matrix() + 0.5 * tensor(b, a).matrix());
    const Qubit red = reduced_system(mixed);
    EXPECT_TRUE(density_matrix_violation(red.matrix()).empty());
    std::normal_distribution<double> n(0.0, 1.0);
    Ket2 k0(Complex(n(rng), n(rng)), Complex(n(rng), n(rng)));
    k0.normalize();
    const Ket2 k1(-std::conj(k0(1)), std::conj(k0(0)));
    double total = 0.0;
    for (const auto& ket : {k0, k1}) {
      try {
        const auto br = partial_trace_system(mixed, ket);
        EXPECT_TRUE(density_matrix_violation(br.state.matrix()).empty());
        total += br.probability;
      } catch (const VanishingBranch&) {
      }
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(qubit, ThermalStateIsFixedPointOfThermalizingChannel) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const auto spec = ThermalSpec::from_excited_population(icoheat::testing::random_e_c(rng, 0, 0.4999));
    const auto t = thermal_state(spec);
    EXPECT_LT(max_abs(Mat2(apply(thermalizing_channel(spec), t).matrix() - t.matrix())), 1e-12);
  }
}
