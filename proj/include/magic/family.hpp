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

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "magic/stabilizer.hpp"

namespace magic {

enum class FamilyTag { kAllStabilizer, kGraph, kDoubledGraph, kMaxCoherent, kOverlapT };

std::string_view family_name(FamilyTag tag);
FamilyTag parse_family(std::string_view name);

// Index-addressable family; any index range can be generated independently.
class StateFamily {
 public:
  // size is the qubit count for ALL_STABILIZER / OVERLAP_T, and the vertex count
  // for GRAPH, MAX_COHERENT and DOUBLED_GRAPH (the latter lives on 2*size qubits).
  StateFamily(FamilyTag tag, int size);

  FamilyTag tag() const { return tag_; }
  int size() const { return size_; }
  int num_qubits() const { return n_; }
  std::uint64_t count() const { return count_; }

  void amplitudes(std::uint64_t index, CVector& out) const;
  StabilizerState state(std::uint64_t index) const;

 private:
  FamilyTag tag_;
  int size_;
  int n_;
  std::uint64_t count_;
  std::shared_ptr<const StabilizerEnumerator> enumerator_;
};

// Shared enumerator cache.
std::shared_ptr<const StabilizerEnumerator> shared_enumerator(int n_qubits, bool zero_offset_only);

bool is_graph_ket(const CVector& psi, double tol = 1e-9);
bool is_max_coherent_ket(const CVector& psi, double tol = 1e-9);
bool is_overlap_t_ket(const CVector& psi, double tol = 1e-9);

// Diagonal phases i^{k_q} applied to qubit q of a graph state.
void coherent_amplitudes(const GraphAdjacency& a, Mask phase_word, CVector& out);

}  // namespace magic
