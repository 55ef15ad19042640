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

#include "telesim/bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace telesim {

namespace {
int wrap_index(int x, int d) {
  int r = x % d;
  return r < 0 ? r + d : r;
}
}  // namespace

ComplexMatrix weyl_unitary(int d, int n, int m) {
  if (d < 2) throw std::invalid_argument("weyl_unitary: dimension must be >= 2");
  const int nn = wrap_index(n, d);
  const int mm = wrap_index(m, d);
  ComplexMatrix u = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const double angle = 2.0 * std::numbers::pi * nn * j / d;
    u(j, (j + mm) % d) = Complex(std::cos(angle), std::sin(angle));
  }
  return u;
}

PureState max_entangled_state(int d) {
  if (d < 2) throw std::invalid_argument("max_entangled_state: dimension must be >= 2");
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) amps(i * d + i) = a;
  return PureState(std::move(amps));
}

PureState bell_state(int d, int n, int m) {
  const ComplexMatrix u = weyl_unitary(d, n, m);
  // (U (x) I)|Omega^{0,0}> has amplitude U(a,b)/sqrt(d) on |a>|b>.
  ComplexVector amps(static_cast<Eigen::Index>(d) * d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      amps(a * d + b) = norm * u(a, b);
  return PureState(std::move(amps));
}

BellBasis bell_basis(int d) {
  BellBasis basis{d, {}};
  basis.states.reserve(static_cast<std::size_t>(d) * d);
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m)
      basis.states.push_back(bell_state(d, n, m));
  return basis;
}

}  // namespace telesim
