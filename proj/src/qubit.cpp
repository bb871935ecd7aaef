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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace icoheat {

namespace {

template <int Dim>
std::string violation_impl(const Eigen::Matrix<Complex, Dim, Dim>& m, double psd_tolerance) {
  std::ostringstream msg;
  for (int r = 0; r < Dim; ++r) {
    for (int c = 0; c < Dim; ++c) {
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) {
        msg << "non-finite entry at (" << r << ", " << c << ")";
        return msg.str();
      }
    }
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTolerance) {
    msg << "not Hermitian (max |m - m^dag| = " << herm << ")";
    return msg.str();
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    msg << "trace " << tr.real() << (tr.imag() < 0 ? "-" : "+") << std::abs(tr.imag())
        << "i is not 1";
    return msg.str();
  }
  const Eigen::Matrix<Complex, Dim, Dim> h = 0.5 * (m + m.adjoint());
  const auto eig = hermitian_eigenvalues(h);
  if (eig[0] < -psd_tolerance) {
    msg << "not positive semidefinite (min eigenvalue " << eig[0] << ")";
    return msg.str();
  }
  return {};
}

}  // namespace

VanishingBranch::VanishingBranch(double probability)
    : std::domain_error("branch has vanishing probability (" + std::to_string(probability) + ")"),
      probability_(probability) {}

std::array<double, 2> hermitian_eigenvalues(const Mat2& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  return {mean - radius, mean + radius};
}

std::array<double, 4> hermitian_eigenvalues(const Mat4& m) {
  Eigen::SelfAdjointEigenSolver<Mat4> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2), ev(3)};
}

std::string density_matrix_violation(const Mat2& m) { return violation_impl<2>(m, kPsdTolerance2); }
std::string density_matrix_violation(const Mat4& m) { return violation_impl<4>(m, kPsdTolerance4); }

template <int Dim>
DensityMatrix<Dim>::DensityMatrix(const Matrix& m) {
  if (auto why = density_matrix_violation(m); !why.empty()) {
    throw std::invalid_argument("invalid density matrix: " + why);
  }
  mat_ = 0.5 * (m + m.adjoint());
}

template class DensityMatrix<2>;
template class DensityMatrix<4>;

Hamiltonian::Hamiltonian(double omega) : omega_(omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("energy gap must be positive and finite");
  }
}

Mat2 Hamiltonian::matrix() const {
  Mat2 h = Mat2::Zero();
  h(1, 1) = omega_;
  return h;
}

ThermalSpec ThermalSpec::from_beta(double beta, Hamiltonian h) {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("inverse temperature must be in (0, +inf], got " +
                                std::to_string(beta));
  }
  const double x = beta * h.omega();
  // 1/(1+e^x) is well-behaved for x = +inf.
  const double excited = 1.0 / (1.0 + std::exp(x));
  const double ground = 1.0 / (1.0 + std::exp(-x));
  return ThermalSpec(beta, ground, excited, h);
}

ThermalSpec ThermalSpec::from_excited_population(double e_c, Hamiltonian h) {
  if (!(e_c >= 0.0 && e_c < 0.5)) {
    throw std::invalid_argument("excited population must be in [0, 0.5), got " +
                                std::to_string(e_c));
  }
  const double beta = e_c == 0.0 ? std::numeric_limits<double>::infinity()
                                 : (std::log1p(-e_c) - std::log(e_c)) / h.omega();
  return ThermalSpec(beta, 1.0 - e_c, e_c, h);
}

double ThermalSpec::partition_function() const {
  return 1.0 + std::exp(-beta_ * h_.omega());
}

Qubit thermal_state(const ThermalSpec& spec, const Hamiltonian& h) {
  const double g = spec.hamiltonian().omega();
  if (std::abs(h.omega() - g) > 1e-15 * g) {
    throw std::invalid_argument("Hamiltonian gap differs from the reservoir's gap");
  }
  return thermal_state(spec);
}

Qubit thermal_state(const ThermalSpec& spec) {
  Mat2 t = Mat2::Zero();
  t(0, 0) = spec.ground_population();
  t(1, 1) = spec.e_c();
  return Qubit(t);
}

double energy(const Qubit& rho, const Hamiltonian& h) { return h.omega() * rho.population(1); }

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Joint tensor(const Qubit& control, const Qubit& system) {
  return Joint(kron(control.matrix(), system.matrix()));
}

Mat2 control_block(const Mat4& m, int control_row, int control_col) {
  return m.block<2, 2>(2 * control_row, 2 * control_col);
}

Branch partial_trace_system(const Joint& joint, const Ket2& control) {
  if (std::abs(control.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("control projector ket is not normalized");
  }
  // <k|_c joint |k>_c = sum_ab conj(k_a) k_b J_ab
  Mat2 unnormalized = Mat2::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      unnormalized += std::conj(control(a)) * control(b) * control_block(joint.matrix(), a, b);
    }
  }
  const double prob = unnormalized.trace().real();
  if (!(prob >= kVanishingProbability)) throw VanishingBranch(prob);
  Mat2 cond = unnormalized / prob;
  cond = 0.5 * (cond + cond.adjoint()).eval();
  return Branch{std::min(prob, 1.0), Qubit(cond)};
}

Qubit reduced_system(const Joint& joint) {
  return Qubit(control_block(joint.matrix(), 0, 0) + control_block(joint.matrix(), 1, 1));
}

Qubit pure_state(const Ket2& psi) {
  if (std::abs(psi.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("ket is not normalized");
  }
  return Qubit(psi * psi.adjoint());
}

}  // namespace icoheat
