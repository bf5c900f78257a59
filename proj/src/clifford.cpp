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

#include "magic/clifford.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_set>

#include "magic/error.hpp"

namespace magic {

namespace {

std::string canonical_key(const CMatrix& u) {
  Complex ph = 1.0;
  for (Index k = 0; k < u.size(); ++k) {
    if (std::abs(u.data()[k]) > 1e-6) {
      ph = std::abs(u.data()[k]) / u.data()[k];
      break;
    }
  }
  std::string key;
  key.reserve(u.size() * 16);
  for (Index k = 0; k < u.size(); ++k) {
    const Complex v = u.data()[k] * ph;
    const long long re = std::llround(v.real() * 1e6);
    const long long im = std::llround(v.imag() * 1e6);
    key.append(reinterpret_cast<const char*>(&re), sizeof re);
    key.append(reinterpret_cast<const char*>(&im), sizeof im);
  }
  return key;
}

}  // namespace

CMatrix gate_matrix(int n_qubits, Gate gate, int qubit, int target) {
  const Index d = Index{1} << n_qubits;
  if (qubit < 0 || qubit >= n_qubits) fail(ErrorCode::kInvalidArgument, "gate qubit out of range");
  const Mask b = qubit_bit(n_qubits, qubit);
  CMatrix m = CMatrix::Zero(d, d);
  const double r = 1.0 / std::sqrt(2.0);
  for (Index col = 0; col < d; ++col) {
    const Mask c = static_cast<Mask>(col);
    switch (gate) {
      case Gate::kH:
        m(c & ~b, col) += r;
        m(c | b, col) += (c & b) ? -r : r;
        break;
      case Gate::kS:
        m(col, col) = (c & b) ? Complex(0, 1) : Complex(1, 0);
        break;
      case Gate::kCnot: {
        if (target < 0 || target >= n_qubits || target == qubit) {
          fail(ErrorCode::kInvalidArgument, "bad CNOT target");
        }
        const Mask t = qubit_bit(n_qubits, target);
        m((c & b) ? (c ^ t) : c, col) = 1.0;
        break;
      }
    }
  }
  return m;
}

CliffordGroup::CliffordGroup(int n_qubits) : n_(n_qubits) {
  std::vector<CMatrix> gens;
  for (int q = 0; q < n_; ++q) {
    gens.push_back(gate_matrix(n_, Gate::kH, q));
    gens.push_back(gate_matrix(n_, Gate::kS, q));
    for (int t = 0; t < n_; ++t) {
      if (t != q) gens.push_back(gate_matrix(n_, Gate::kCnot, q, t));
    }
  }
  const Index d = Index{1} << n_;
  std::unordered_set<std::string> seen;
  std::deque<std::size_t> queue;
  elements_.push_back(CMatrix::Identity(d, d));
  seen.insert(canonical_key(elements_[0]));
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      CMatrix v = g * elements_[i];
      if (seen.insert(canonical_key(v)).second) {
        elements_.push_back(std::move(v));
        queue.push_back(elements_.size() - 1);
      }
    }
  }
  const std::size_t expected = n_ == 1 ? 24 : 11520;
  if (elements_.size() != expected) {
    fail(ErrorCode::kNumericalFailure, "Clifford closure produced " + std::to_string(elements_.size()) +
                                           " elements, expected " + std::to_string(expected));
  }
}

const CliffordGroup& CliffordGroup::get(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 2) {
    fail(ErrorCode::kSizeCapExceeded, "Clifford group materialized for 1 or 2 qubits only");
  }
  static std::once_flag once[2];
  static const CliffordGroup* groups[2] = {nullptr, nullptr};
  std::call_once(once[n_qubits - 1], [n_qubits] { groups[n_qubits - 1] = new CliffordGroup(n_qubits); });
  return *groups[n_qubits - 1];
}

CMatrix random_clifford(int n_qubits, std::mt19937_64& rng) {
  if (n_qubits <= 2) {
    const auto& g = CliffordGroup::get(n_qubits);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    return g.element(pick(rng));
  }
  const Index d = Index{1} << n_qubits;
  CMatrix u = CMatrix::Identity(d, d);
  std::uniform_int_distribution<int> qd(0, n_qubits - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  const int depth = 20 * n_qubits * n_qubits;
  for (int step = 0; step < depth; ++step) {
    const int k = kind(rng);
    const int q = qd(rng);
    if (k == 2) {
      int t = qd(rng);
      while (t == q) t = qd(rng);
      u = gate_matrix(n_qubits, Gate::kCnot, q, t) * u;
    } else {
      u = gate_matrix(n_qubits, k == 0 ? Gate::kH : Gate::kS, q) * u;
    }
  }
  return u;
}

}  // namespace magic
