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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace telesim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numerical tolerances shared by validation and reconstruction checks.
/// Defaults are library-wide; callers may override per operation.
struct Tolerances {
  double herm = 1e-10;   ///< max entrywise |M - M^dagger| accepted as Hermitian
  double psd = 1e-10;    ///< eigenvalues >= -psd accepted as positive semidefinite
  double trace = 1e-10;  ///< |Tr(M) - 1| accepted for density matrices
  double recon = 1e-8;   ///< reconstruction error bound for matrix square roots
};

inline constexpr double kTolHerm = 1e-10;
inline constexpr double kTolPsd = 1e-10;
inline constexpr double kTolTrace = 1e-10;
inline constexpr double kTolRecon = 1e-8;
inline constexpr double kTolNorm = 1e-10;

/// Which factor of a bipartite space survives a partial trace.
enum class Subsystem { A, B };

/// Kronecker product; the (i,j) block of the result is a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out one factor of a (dim_a * dim_b)-dimensional bipartite operator.
/// Throws "bad bipartition" if the matrix is not square of size dim_a * dim_b.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Subsystem keep);

/// Principal square root of a Hermitian PSD matrix via eigendecomposition.
/// The input is symmetrized as (M + M^dagger)/2 when within tol_herm;
/// eigenvalues in [-tol_psd, 0) are clamped to zero, anything below throws
/// "not PSD".
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m, double tol_herm = kTolHerm,
                             double tol_psd = kTolPsd);

/// Exchange operator on H_d (x) H_d: swaps |i>|j> -> |j>|i>.
/// Hermitian, unitary, entries exactly 0/1. Satisfies Tr((A(x)B) F) = Tr(AB).
ComplexMatrix swap_operator(int d);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& m);

/// Matrix product with an explicit inner-dimension check.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace.
Complex trace(const ComplexMatrix& m);

/// Half the sum of absolute eigenvalues of rho - sigma. Inputs must be
/// Hermitian (within kTolHerm) and of equal dimension. In [0,1] for density
/// inputs; used throughout the tests as the distance metric.
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

// Small helpers shared across modules.
double max_abs(const ComplexMatrix& m);
double hermiticity_defect(const ComplexMatrix& m);

/// FNV-1a hash over the dimensions and the exact bit patterns of the
/// entries (row-major, real then imaginary). Provenance tag for reports.
std::uint64_t matrix_fingerprint(const ComplexMatrix& m);

}  // namespace telesim
