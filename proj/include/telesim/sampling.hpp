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

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "telesim/rng.hpp"
#include "telesim/states.hpp"

namespace telesim {

/// Result of a Monte Carlo run: sample mean, standard error of the mean
/// (unbiased sample std / sqrt(N)), sample count, and the stream the run
/// started from. Deterministic given (seed, stream, n), independent of the
/// number of worker threads.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  RngState rng{};
};

/// Haar-distributed d x d unitary: Ginibre matrix, QR factorization, then
/// the R-diagonal phase correction that makes the distribution exactly
/// invariant under left/right multiplication by fixed unitaries.
ComplexMatrix haar_unitary(int d, Rng& rng);

/// Haar-distributed unit vector (normalized complex Gaussian vector).
PureState haar_pure(int dim, Rng& rng);

/// Mixed state distributed by the Hilbert-Schmidt measure: the reduced state
/// of a Haar-random pure state on H_d (x) H_d, traced over the first
/// (ancilla) factor.
DensityMatrix hs_mixed(int d, Rng& rng);

/// Numerically stable deterministic reduction; result depends only on the
/// element order, never on thread count.
double pairwise_sum(std::span<const double> xs);

namespace detail {

McEstimate reduce_samples(const std::vector<double>& values, RngState rng);

template <typename Sampler, typename Statistic>
void fill_values_serial(std::vector<double>& values, Sampler& sampler,
                        Statistic& statistic, RngState rng) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  for (std::int64_t i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] =
        statistic(sampler(rng.at_stream(static_cast<std::uint64_t>(i))));
  }
}

void check_sample_count(std::int64_t n);
int resolve_thread_count(int threads);

}  // namespace detail

/// Serial reference estimator: mean and standard error of
/// statistic(sampler(stream_i)) over n independent sub-streams
/// stream_i = rng.stream + i. Kept verbatim as the comparison baseline for
/// the OpenMP path; both produce bit-identical results.
template <typename Sampler, typename Statistic>
McEstimate mc_estimate_serial(Sampler&& sampler, Statistic&& statistic,
                              std::int64_t n, RngState rng) {
  detail::check_sample_count(n);
  std::vector<double> values(static_cast<std::size_t>(n));
  detail::fill_values_serial(values, sampler, statistic, rng);
  return detail::reduce_samples(values, rng);
}

/// OpenMP estimator. Each sample i draws from its own sub-stream
/// rng.stream + i and writes to its own slot, and the mean/variance
/// reduction runs over the filled array in a fixed pairwise order, so the
/// estimate is bit-identical for every thread count (threads <= 0 means the
/// OpenMP default).
template <typename Sampler, typename Statistic>
McEstimate mc_estimate(Sampler&& sampler, Statistic&& statistic,
                       std::int64_t n, RngState rng, int threads = 0) {
  detail::check_sample_count(n);
  std::vector<double> values(static_cast<std::size_t>(n));
  const int num_threads = detail::resolve_thread_count(threads);
#pragma omp parallel for schedule(static) num_threads(num_threads)
  for (std::int64_t i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] =
        statistic(sampler(rng.at_stream(static_cast<std::uint64_t>(i))));
  }
  return detail::reduce_samples(values, rng);
}

}  // namespace telesim
