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

#include "telesim/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace telesim {

namespace {

constexpr double kProbClamp = 1e-12;

int bipartite_side(const DensityMatrix& chi) {
  const int dim = chi.dim();
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim))));
  if (d < 2 || d * d != dim) {
    throw std::invalid_argument(
        "invalid resource state: dimension is not a perfect square d^2");
  }
  return d;
}

}  // namespace

RealMatrix outcome_probs(const DensityMatrix& chi) {
  const int d = bipartite_side(chi);
  const BellBasis basis = bell_basis(d);
  RealMatrix probs(d, d);
  double sum = 0.0;
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      const ComplexVector& omega = basis.at(n, m).amplitudes();
      const double p = (omega.adjoint() * chi.matrix() * omega).real()(0);
      if (p < -kProbClamp) {
        throw std::invalid_argument("invalid resource state: negative outcome probability");
      }
      probs(n, m) = p < 0.0 ? 0.0 : p;
      sum += probs(n, m);
    }
  }
  if (std::abs(sum - 1.0) > kTolTrace) {
    throw std::invalid_argument("invalid resource state: outcome probabilities do not sum to 1");
  }
  return probs;
}

double singlet_fraction(const DensityMatrix& chi) {
  const int d = bipartite_side(chi);
  const ComplexVector& omega = max_entangled_state(d).amplitudes();
  const double p = (omega.adjoint() * chi.matrix() * omega).real()(0);
  return p < 0.0 ? 0.0 : p;
}

TeleportChannel::TeleportChannel(int d, RealMatrix probs, std::uint64_t fingerprint)
    : d_(d), probs_(std::move(probs)), fingerprint_(fingerprint) {
  weyls_.reserve(static_cast<std::size_t>(d_) * d_);
  for (int n = 0; n < d_; ++n)
    for (int m = 0; m < d_; ++m)
      weyls_.push_back(weyl_unitary(d_, n, -m));
}

TeleportChannel TeleportChannel::from_resource(const DensityMatrix& chi) {
  const int d = bipartite_side(chi);
  return TeleportChannel(d, outcome_probs(chi), matrix_fingerprint(chi.matrix()));
}

DensityMatrix apply_channel(const TeleportChannel& ch, const DensityMatrix& rho) {
  const int d = ch.dim();
  if (rho.dim() != d) {
    throw std::invalid_argument("apply_channel: dimension mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  const auto& weyls = ch.conjugations();
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      const double p = ch.probs()(n, m);
      if (p == 0.0) continue;
      const ComplexMatrix& w = weyls[static_cast<std::size_t>(n) * d + m];
      out.noalias() += p * (w * rho.matrix() * w.adjoint());
    }
  }
  return DensityMatrix(out);
}

std::vector<ComplexMatrix> channel_kraus(const TeleportChannel& ch) {
  const int d = ch.dim();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(d) * d);
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m)
      kraus.push_back(std::sqrt(ch.probs()(n, m)) *
                      ch.conjugations()[static_cast<std::size_t>(n) * d + m]);
  return kraus;
}

GeneralProtocol standard_protocol(int d) {
  const BellBasis basis = bell_basis(d);
  GeneralProtocol proto;
  proto.d = d;
  proto.measurement_ops.reserve(basis.states.size());
  proto.corrections.reserve(basis.states.size());
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      proto.measurement_ops.push_back(basis.at(n, m).projector());
      proto.corrections.push_back(weyl_unitary(d, n, m));
    }
  }
  return proto;
}

DensityMatrix simulate_protocol(const DensityMatrix& chi,
                                const DensityMatrix& rho,
                                const GeneralProtocol& proto) {
  const int d = proto.d;
  if (d < 2 || rho.dim() != d || chi.dim() != d * d) {
    throw std::invalid_argument("simulate_protocol: dimension mismatch");
  }
  if (proto.measurement_ops.empty() ||
      proto.measurement_ops.size() != proto.corrections.size()) {
    throw std::invalid_argument("simulate_protocol: malformed protocol");
  }
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix completeness = ComplexMatrix::Zero(dd, dd);
  for (const auto& op : proto.measurement_ops) {
    if (op.rows() != dd || op.cols() != dd) {
      throw std::invalid_argument("simulate_protocol: malformed protocol");
    }
    completeness.noalias() += op.adjoint() * op;
  }
  if (max_abs(completeness - ComplexMatrix::Identity(dd, dd)) > kTolHerm) {
    throw std::invalid_argument("simulate_protocol: not a measurement");
  }

  // Joint system ordering: sender's input qudit, sender's resource half,
  // receiver's resource half.
  const ComplexMatrix joint = kron(rho.matrix(), chi.matrix());
  const ComplexMatrix id_recv = ComplexMatrix::Identity(d, d);
  ComplexMatrix final_state = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < proto.measurement_ops.size(); ++i) {
    const ComplexMatrix meas = kron(proto.measurement_ops[i], id_recv);
    const ComplexMatrix branch_joint = meas * joint * meas.adjoint();
    // Unnormalized branch: carries its own outcome probability, so no
    // division by near-zero probabilities is ever needed.
    const ComplexMatrix branch =
        partial_trace(branch_joint, d * d, d, Subsystem::B);
    const ComplexMatrix& correction = proto.corrections[i];
    if (correction.rows() != d || correction.cols() != d) {
      throw std::invalid_argument("simulate_protocol: malformed protocol");
    }
    final_state.noalias() += correction * branch * correction.adjoint();
  }
  return DensityMatrix(final_state);
}

}  // namespace telesim
