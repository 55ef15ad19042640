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

#include <vector>

#include "telesim/states.hpp"

namespace telesim {

/// Shift-and-phase unitary U^{n,m} = sum_j exp(i 2 pi n j / d) |j><(j+m) mod d|
/// generalizing the qubit Pauli Z (n) and X (m) to dimension d.
/// Negative indices wrap: (d, n, -m) means (d, n mod d, (d - m) mod d).
/// U^{0,0} is the identity. Throws for d < 2.
ComplexMatrix weyl_unitary(int d, int n, int m);

/// Maximally entangled state (1/sqrt d) sum_i |i>|i> on H_d (x) H_d.
PureState max_entangled_state(int d);

/// Generalized Bell state |Omega^{n,m}> = (U^{n,m} (x) I) |Omega^{0,0}>.
PureState bell_state(int d, int n, int m);

/// The d^2 generalized Bell states, indexed row-major by (n, m).
/// Pairwise orthonormal and complete on H_d (x) H_d.
struct BellBasis {
  int d;
  std::vector<PureState> states;

  const PureState& at(int n, int m) const { return states[n * d + m]; }
};

BellBasis bell_basis(int d);

}  // namespace telesim
