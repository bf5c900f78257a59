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

#include "magic/dictionary.hpp"

#include <map>
#include <mutex>

#include "magic/error.hpp"
#include "magic/family.hpp"
#include "magic/operator.hpp"

namespace magic {

Dictionary::Dictionary(int n_qubits, std::vector<CVector> states, std::string tag)
    : n_(n_qubits), states_(std::move(states)), tag_(std::move(tag)) {
  if (states_.empty()) fail(ErrorCode::kEmptyDictionary, "dictionary has no states");
  const Index d = Index{1} << n_;
  coords_.resize(d * d, static_cast<Index>(states_.size()));
  for (std::size_t j = 0; j < states_.size(); ++j) {
    if (states_[j].size() != d) fail(ErrorCode::kDimensionMismatch, "dictionary state size mismatch");
    states_[j] = normalized(states_[j]);
    const auto spec = pauli_spectrum(states_[j]);
    for (Index a = 0; a < d * d; ++a) coords_(a, static_cast<Index>(j)) = spec[a];
  }
}

std::shared_ptr<const Dictionary> Dictionary::stabilizer(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 4) {
    fail(ErrorCode::kSizeCapExceeded, "stabilizer dictionary supports 1..4 qubits");
  }
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Dictionary>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n_qubits];
  if (!slot) {
    const auto e = shared_enumerator(n_qubits, false);
    std::vector<CVector> states(e->size());
    for (std::uint64_t i = 0; i < e->size(); ++i) e->amplitudes(i, states[i]);
    slot = std::make_shared<Dictionary>(n_qubits, std::move(states), "stabilizer");
  }
  return slot;
}

RVector Dictionary::expectations(const CMatrix& w) const {
  RVector out(static_cast<Index>(states_.size()));
  for (std::size_t j = 0; j < states_.size(); ++j) {
    out(static_cast<Index>(j)) = states_[j].dot(w * states_[j]).real();
  }
  return out;
}

}  // namespace magic
