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

#include <cstdint>
#include <vector>

#include "telesim/bell.hpp"
#include "telesim/states.hpp"

namespace telesim {

/// Bell-diagonal outcome probabilities of a d x d bipartite resource state:
/// probs(n, m) = <Omega^{n,m}| chi |Omega^{n,m}>. Real, clamped at zero for
/// round-off, summing to 1. Throws "invalid resource state" when chi does
/// not live on a d^2-dimensional space or fails the density invariants.
RealMatrix outcome_probs(const DensityMatrix& chi);

/// Overlap with the maximally entangled state, probs(0, 0). In [0, 1];
/// equal to 1 exactly for the perfect resource.
double singlet_fraction(const DensityMatrix& chi);

/// The teleportation channel induced by sending qudits through a fixed
/// bipartite resource with the Bell measurement and Weyl corrections: a
/// generalized depolarizing channel
///
///   eps(rho) = sum_{n,m} p_{nm} U^{n,-m} rho U^{n,-m dagger}.
///
/// The channel depends on the resource only through the probability grid
/// p_{nm}; a fingerprint of the source matrix is kept for provenance.
class TeleportChannel {
 public:
  static TeleportChannel from_resource(const DensityMatrix& chi);

  int dim() const { return d_; }
  const RealMatrix& probs() const { return probs_; }
  double singlet_fraction() const { return probs_(0, 0); }
  std::uint64_t resource_fingerprint() const { return fingerprint_; }

  /// The conjugating unitaries U^{n,-m}, indexed row-major by (n, m).
  const std::vector<ComplexMatrix>& conjugations() const { return weyls_; }

 private:
  TeleportChannel(int d, RealMatrix probs, std::uint64_t fingerprint);

  int d_;
  RealMatrix probs_;
  std::uint64_t fingerprint_;
  std::vector<ComplexMatrix> weyls_;
};

/// Applies the channel. Trace preserving, completely positive, unital;
/// output is validated. Throws on dimension mismatch.
DensityMatrix apply_channel(const TeleportChannel& ch, const DensityMatrix& rho);

/// Operator-sum form: the d^2 Kraus operators sqrt(p_{nm}) U^{n,-m},
/// row-major in (n, m). They satisfy sum A^dagger A = I.
std::vector<ComplexMatrix> channel_kraus(const TeleportChannel& ch);

/// A measurement-plus-correction teleportation protocol: measurement
/// operators M_i on the sender's two qudits (completeness
/// sum M_i^dagger M_i = I required) and one correction unitary per outcome
/// applied to the receiver's qudit.
struct GeneralProtocol {
  int d = 0;
  std::vector<ComplexMatrix> measurement_ops;  // each d^2 x d^2
  std::vector<ComplexMatrix> corrections;      // each d x d
};

/// Bell projectors |Omega^{n,m}><Omega^{n,m}| with corrections U^{n,m}.
/// With the perfect resource this teleports every input exactly.
GeneralProtocol standard_protocol(int d);

/// Step-by-step protocol simulation, the independent oracle for
/// apply_channel: forms rho (x) chi, applies each measurement branch,
/// traces out the sender, applies the correction, and sums the branches.
/// Outcome branches are accumulated unnormalized, so near-zero outcome
/// probabilities never cause a divide round trip.
/// Throws "not a measurement" if the completeness condition fails.
DensityMatrix simulate_protocol(const DensityMatrix& chi,
                                const DensityMatrix& rho,
                                const GeneralProtocol& proto);

}  // namespace telesim
