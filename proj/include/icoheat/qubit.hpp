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

#ifndef ICOHEAT_QUBIT_HPP
#define ICOHEAT_QUBIT_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace icoheat {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Ket2 = Eigen::Vector2cd;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance2 = 1e-12;
inline constexpr double kPsdTolerance4 = 1e-10;

/// Branch probabilities below this are treated as vanishing.
inline constexpr double kVanishingProbability = 1e-15;

/// Thrown when a post-selected branch has (numerically) zero probability, so
/// no conditional state exists.
class VanishingBranch : public std::domain_error {
 public:
  explicit VanishingBranch(double probability);
  double probability() const noexcept { return probability_; }

 private:
  double probability_;
};

/// Eigenvalues of a Hermitian matrix in ascending order. The 2x2 case uses the
/// closed-form quadratic; the 4x4 case uses Eigen's self-adjoint solver.
std::array<double, 2> hermitian_eigenvalues(const Mat2& m);
std::array<double, 4> hermitian_eigenvalues(const Mat4& m);

/// Largest entrywise modulus.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

/// Hermitian, unit-trace, positive-semidefinite state on a qubit (Dim = 2) or
/// on control (x) system (Dim = 4). Construction validates; instances are
/// immutable.
template <int Dim>
class DensityMatrix {
  static_assert(Dim == 2 || Dim == 4, "only qubit and two-qubit states");

 public:
  using Matrix = Eigen::Matrix<Complex, Dim, Dim>;

  /// Throws std::invalid_argument if `m` is not a valid state.
  explicit DensityMatrix(const Matrix& m);

  const Matrix& matrix() const noexcept { return mat_; }
  Complex operator()(int row, int col) const { return mat_(row, col); }

  /// Real diagonal entry <level|rho|level>.
  double population(int level) const { return mat_(level, level).real(); }

  static constexpr int dim() noexcept { return Dim; }

 private:
  Matrix mat_;
};

using Qubit = DensityMatrix<2>;
using Joint = DensityMatrix<4>;

/// Returns a description of the first violated density-matrix invariant, or
/// an empty string if `m` is a valid state.
std::string density_matrix_violation(const Mat2& m);
std::string density_matrix_violation(const Mat4& m);

/// Two-level Hamiltonian H = omega |1><1|.
class Hamiltonian {
 public:
  explicit Hamiltonian(double omega = 1.0);
  double omega() const noexcept { return omega_; }
  Mat2 matrix() const;

 private:
  double omega_;
};

/// Reservoir temperature, held both as inverse temperature beta and as the
/// excited population e_c = exp(-beta*omega) / (1 + exp(-beta*omega)) of the
/// qubit it thermalizes. beta = +inf (e_c = 0) is the zero-temperature
/// reservoir; the infinite-temperature point e_c = 0.5 is only reachable as a
/// limit.
class ThermalSpec {
 public:
  /// beta in (0, +inf]. Throws std::invalid_argument otherwise.
  static ThermalSpec from_beta(double beta, Hamiltonian h = Hamiltonian{});
  /// e_c in [0, 0.5). Throws std::invalid_argument otherwise.
  static ThermalSpec from_excited_population(double e_c, Hamiltonian h = Hamiltonian{});

  double beta() const noexcept { return beta_; }
  double e_c() const noexcept { return excited_; }
  double ground_population() const noexcept { return ground_; }
  double partition_function() const;
  const Hamiltonian& hamiltonian() const noexcept { return h_; }
  /// Mean energy of the reservoir's thermal state, e_c * omega.
  double reservoir_energy() const noexcept { return excited_ * h_.omega(); }
  bool is_zero_temperature() const noexcept { return excited_ == 0.0; }

 private:
  ThermalSpec(double beta, double ground, double excited, Hamiltonian h)
      : beta_(beta), ground_(ground), excited_(excited), h_(h) {}

  double beta_;
  double ground_;
  double excited_;
  Hamiltonian h_;
};

/// T = exp(-beta H) / Z. The Hamiltonian must carry the spec's energy gap.
Qubit thermal_state(const ThermalSpec& spec, const Hamiltonian& h);
Qubit thermal_state(const ThermalSpec& spec);

/// Tr(rho H).
double energy(const Qubit& rho, const Hamiltonian& h);

/// Kronecker product with the control factor first.
Joint tensor(const Qubit& control, const Qubit& system);
Mat4 kron(const Mat2& a, const Mat2& b);

/// 2x2 block (control_row, control_col) of a control (x) system operator.
Mat2 control_block(const Mat4& m, int control_row, int control_col);

struct Branch {
  double probability;
  Qubit state;
};

/// Projects the control factor of `joint` onto the unit ket `control` and
/// traces it out. Throws VanishingBranch when the probability is below
/// kVanishingProbability and std::invalid_argument for a non-normalized ket.
Branch partial_trace_system(const Joint& joint, const Ket2& control);

/// Tr_c(joint).
Qubit reduced_system(const Joint& joint);

/// Pure-state density matrix |psi><psi| of a unit ket.
Qubit pure_state(const Ket2& psi);

}  // namespace icoheat

#endif  // ICOHEAT_QUBIT_HPP
