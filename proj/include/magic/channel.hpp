// Copyright 2026 The Magic Toolkit Authors
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

#include <optional>
#include <random>
#include <vector>

#include "magic/doped.hpp"
#include "magic/membership.hpp"
#include "magic/operator.hpp"

namespace magic {

class QuantumChannel {
 public:
  QuantumChannel() = default;
  // Checks square d x d Kraus operators with sum K^dag K = I to 1e-9.
  explicit QuantumChannel(std::vector<CMatrix> kraus);

  static QuantumChannel unitary(const CMatrix& u);
  // (1 - w) U . U^dag + w tr(.) I/d
  static QuantumChannel depolarized_unitary(const CMatrix& u, double w);
  static QuantumChannel dephasing(double p);
  // Kraus set from a QR-orthonormalized Gaussian isometry.
  static QuantumChannel random(int n_qubits, int num_kraus, std::mt19937_64& rng);

  int num_qubits() const { return n_; }
  const std::vector<CMatrix>& kraus() const { return kraus_; }

  // Applies the channel to the first n qubits of rho.
  CMatrix apply(const CMatrix& rho) const;
  QuantumChannel compose(const QuantumChannel& after) const;

 private:
  int n_ = 0;
  std::vector<CMatrix> kraus_;
};

// Unit-trace Choi state (E (x) I)(|phi+><phi+|) on 2n qubits.
struct ChoiState {
  DensityMatrix rho;
  // Distance of the input-register marginal from I/d.
  double marginal_error = 0.0;
};

ChoiState choi_state(const QuantumChannel& channel);

struct ChannelVerdict {
  ChoiState choi;
  MembershipVerdict verdict;
  Decision decision = Decision::kPromiseViolated;
  std::optional<WitnessReport> witness;
  // Doped classification only.
  std::optional<double> certified_margin;
  bool seed_added = false;
};

ChannelVerdict classify_cspc(const QuantumChannel& channel, double eps);
ChannelVerdict classify_ctdspc(const QuantumChannel& channel, int t, double net_eps, double eps,
                               const DopedOptions& opts = {});

struct ThresholdBracket {
  double lo = 0.0;  // outside the polytope
  double hi = 1.0;  // inside
  int steps = 0;
};

// Smallest mixing weight towards full depolarization that makes the Choi
// state of the depolarized unitary stabilizer, located to within width.
ThresholdBracket depolarizing_threshold(const CMatrix& u, double width = 0.01);

CMatrix t_gate();

}  // namespace magic
