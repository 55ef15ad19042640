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

#include <array>
#include <complex>
#include <cstdint>

namespace telesim {

/// Identifies one deterministic random stream. The same (seed, stream) pair
/// always reproduces the identical sample sequence, and distinct streams are
/// statistically independent, so parallel workers can draw from disjoint
/// sub-streams without coordination.
struct RngState {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  RngState at_stream(std::uint64_t offset) const {
    return {seed, stream + offset};
  }

  friend bool operator==(const RngState&, const RngState&) = default;
};

/// xoshiro256++ generator keyed by (seed, stream) through a splitmix64
/// expansion. Cheap to construct, so a fresh engine per sub-stream is the
/// intended usage pattern.
class Rng {
 public:
  explicit Rng(RngState state);

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal via Box-Muller; consumes uniforms in pairs.
  double gaussian();

  /// Complex number with independent standard-normal real and imaginary
  /// parts (one Box-Muller pair).
  std::complex<double> complex_gaussian();

 private:
  std::array<std::uint64_t, 4> s_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace telesim
