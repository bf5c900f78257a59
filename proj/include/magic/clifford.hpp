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

#include <random>
#include <vector>

#include "magic/types.hpp"

namespace magic {

enum class Gate { kH, kS, kCnot };

// Dense gate on n qubits; target is only used by CNOT.
CMatrix gate_matrix(int n_qubits, Gate gate, int qubit, int target = -1);

// Clifford group modulo global phase, by closure over {H, S, CNOT}.
class CliffordGroup {
 public:
  // n in {1, 2}; sizes 24 and 11520.
  static const CliffordGroup& get(int n_qubits);

  int num_qubits() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const CMatrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<CMatrix>& elements() const { return elements_; }

 private:
  explicit CliffordGroup(int n_qubits);

  int n_;
  std::vector<CMatrix> elements_;
};

// Uniform over the group for n <= 2; a random generator circuit otherwise.
CMatrix random_clifford(int n_qubits, std::mt19937_64& rng);

}  // namespace magic
