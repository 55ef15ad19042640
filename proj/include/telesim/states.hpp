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

#pragma once

#include "telesim/matrix.hpp"

namespace telesim {

/// Unit-norm complex vector with a dimension tag.
class PureState {
 public:
  /// Validates Euclidean norm within tol of 1 and finite entries.
  explicit PureState(ComplexVector amplitudes, double tol_norm = kTolNorm);

  int dim() const { return static_cast<int>(amps_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }

  /// Rank-one projector |psi><psi|.
  ComplexMatrix projector() const { return amps_ * amps_.adjoint(); }

 private:
  ComplexVector amps_;
};

/// Hermitian, positive semidefinite, unit-trace operator.
///
/// Construction validates all three invariants: Hermiticity within tol.herm
/// (the stored matrix is the symmetrized (M + M^dagger)/2), trace within
/// tol.trace of 1, and minimum eigenvalue >= -tol.psd. Eigenvalues in
/// [-tol.psd, 0) are clamped to zero; anything below is rejected.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m, const Tolerances& tol = {});

  /// Projector of a validated pure state. The invariants hold by
  /// construction, so no eigenvalue sweep is performed.
  static DensityMatrix from_pure(const PureState& psi);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& matrix() const { return mat_; }

 private:
  struct Trusted {};
  DensityMatrix(Trusted, ComplexMatrix m) : mat_(std::move(m)) {}

  ComplexMatrix mat_;
};

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace telesim
