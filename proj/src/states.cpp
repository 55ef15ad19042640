// Copyright 2026 The telesim developers
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

#include "telesim/states.hpp"

#include <cmath>
#include <stdexcept>

namespace telesim {

PureState::PureState(ComplexVector amplitudes, double tol_norm)
    : amps_(std::move(amplitudes)) {
  if (amps_.size() < 1) {
    throw std::invalid_argument("pure state must have dimension >= 1");
  }
  if (!amps_.allFinite()) {
    throw std::invalid_argument("pure state has non-finite amplitudes");
  }
  if (std::abs(amps_.norm() - 1.0) > tol_norm) {
    throw std::invalid_argument("pure state not normalized");
  }
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("density matrix must be square");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("density matrix has non-finite entries");
  }
  if (hermiticity_defect(m) > tol.herm) {
    throw std::invalid_argument("density matrix not Hermitian");
  }
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  if (std::abs(sym.trace() - Complex(1.0)) > tol.trace) {
    throw std::invalid_argument("density matrix trace differs from one");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol.psd) {
    throw std::invalid_argument("density matrix not PSD");
  }
  if (min_eig < 0.0) {
    // Round-off negatives within tolerance: clamp and reassemble.
    es.compute(sym);
    const RealVector lam = es.eigenvalues().cwiseMax(0.0);
    mat_ = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
  } else {
    mat_ = std::move(sym);
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(Trusted{}, psi.projector());
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return trace_distance(rho.matrix(), sigma.matrix());
}

}  // namespace telesim
