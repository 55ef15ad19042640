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

#include "telesim/sampling.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace telesim {

ComplexMatrix haar_unitary(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("haar_unitary: dimension must be >= 1");
  ComplexMatrix ginibre(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      ginibre(i, j) = rng.complex_gaussian();
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre);
  ComplexMatrix q = qr.householderQ();
  const ComplexVector r_diag = qr.matrixQR().diagonal();
  for (int j = 0; j < d; ++j) {
    const double mag = std::abs(r_diag(j));
    const Complex phase = mag > 0.0 ? r_diag(j) / mag : Complex(1.0);
    q.col(j) *= phase;
  }
  return q;
}

PureState haar_pure(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_pure: dimension must be >= 1");
  ComplexVector amps(dim);
  double norm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) amps(i) = rng.complex_gaussian();
    norm = amps.norm();
  } while (!(norm > 1e-150));
  amps /= norm;
  return PureState(std::move(amps));
}

DensityMatrix hs_mixed(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("hs_mixed: dimension must be >= 1");
  const PureState phi = haar_pure(d * d, rng);
  return DensityMatrix(
      partial_trace(phi.projector(), d, d, Subsystem::B));
}

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

namespace detail {

void check_sample_count(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("mc_estimate: need at least 2 samples");
  }
}

int resolve_thread_count(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

McEstimate reduce_samples(const std::vector<double>& values, RngState rng) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  const double mean = pairwise_sum(values) / static_cast<double>(n);
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double dev = values[i] - mean;
    sq[i] = dev * dev;
  }
  const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
  const double std_error = std::sqrt(var / static_cast<double>(n));
  return McEstimate{mean, std_error, n, rng};
}

}  // namespace detail

}  // namespace telesim
