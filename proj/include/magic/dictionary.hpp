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

#include <memory>
#include <string>
#include <vector>

#include "magic/types.hpp"

namespace magic {

// Finite set of pure states with their Pauli coordinates tr(P sigma_j).
class Dictionary {
 public:
  Dictionary(int n_qubits, std::vector<CVector> states, std::string tag);

  // All pure stabilizer states on n <= 4 qubits (shared, built once).
  static std::shared_ptr<const Dictionary> stabilizer(int n_qubits);

  int num_qubits() const { return n_; }
  std::size_t size() const { return states_.size(); }
  const CVector& state(std::size_t j) const { return states_[j]; }
  const std::vector<CVector>& states() const { return states_; }
  const std::string& tag() const { return tag_; }
  // Column j holds tr(P_a sigma_j) for every Hermitian Pauli a (4^n rows).
  const RMatrix& pauli_coordinates() const { return coords_; }

  // tr(W sigma_j) for every member.
  RVector expectations(const CMatrix& w) const;

 private:
  int n_;
  std::vector<CVector> states_;
  std::string tag_;
  RMatrix coords_;
};

}  // namespace magic
