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

#include <array>
#include <cstdint>
#include <vector>

#include "magic/pauli.hpp"
#include "magic/types.hpp"

namespace magic {

class StabilizerState {
 public:
  StabilizerState() = default;
  // Validates commutation, independence, absence of -I and the stabilizer equations.
  StabilizerState(std::vector<PauliString> generators, CVector amplitudes);

  // Derives generators from the Pauli spectrum; throws if psi is not a stabilizer state.
  static StabilizerState from_ket(const CVector& psi);

  int num_qubits() const { return n_; }
  const std::vector<PauliString>& generators() const { return generators_; }
  const CVector& amplitudes() const { return amps_; }
  CMatrix density() const { return amps_ * amps_.adjoint(); }

 private:
  int n_ = 0;
  std::vector<PauliString> generators_;
  CVector amps_;
};

class GraphAdjacency {
 public:
  GraphAdjacency() = default;
  // Edge bits in lexicographic order (0,1),(0,2),...,(m-2,m-1).
  GraphAdjacency(int n_vertices, std::uint64_t edge_bits);

  static int edge_count(int n_vertices) { return n_vertices * (n_vertices - 1) / 2; }
  static int edge_index(int n_vertices, int i, int j);
  static std::pair<int, int> edge_vertices(int n_vertices, int index);

  int num_vertices() const { return m_; }
  std::uint64_t edge_bits() const { return bits_; }
  bool has_edge(int i, int j) const;
  // Neighbour set of vertex i as a basis-index mask.
  Mask neighbours(int i) const;

 private:
  int m_ = 0;
  std::uint64_t bits_ = 0;
};

StabilizerState graph_state(const GraphAdjacency& a);
void graph_amplitudes(const GraphAdjacency& a, CVector& out);

double state_overlap(const StabilizerState& s, const StabilizerState& t);

// Affine-subspace parametrization of all n-qubit stabilizer states: support on a
// coset t + span(R), phases i^{l.y} (-1)^{c.y + sum_{a<b} Q_ab y_a y_b}.
class StabilizerEnumerator {
 public:
  // zero_offset_only keeps the states whose support contains |0...0>.
  explicit StabilizerEnumerator(int n_qubits, bool zero_offset_only = false);

  int num_qubits() const { return n_; }
  std::uint64_t size() const { return total_; }
  void amplitudes(std::uint64_t index, CVector& out) const;
  StabilizerState state(std::uint64_t index) const;

 private:
  struct Subspace {
    int k = 0;
    std::array<Mask, kMaxQubits> rows{};
    std::array<int, kMaxQubits> pivots{};
    std::vector<Mask> offsets;
    std::uint64_t per_offset = 0;
  };
  struct Params {
    const Subspace* sub;
    Mask offset;
    Mask l;
    Mask c;
    std::uint64_t q;
  };

  Params decode(std::uint64_t index) const;

  int n_;
  bool zero_only_;
  std::vector<Subspace> subspaces_;
  std::vector<std::uint64_t> prefix_;
  std::uint64_t total_ = 0;
};

// Closed-form count 2^n prod_{k=1..n} (2^k + 1).
std::uint64_t stabilizer_count(int n_qubits);
// Full materialization for n <= 4.
std::vector<StabilizerState> enumerate_stabilizer_states(int n_qubits);

bool is_stabilizer_ket(const CVector& psi, double tol = 1e-9);

}  // namespace magic
