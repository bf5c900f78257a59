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

#include "magic/family.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "magic/error.hpp"
#include "magic/operator.hpp"

namespace magic {

namespace {

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

std::string_view family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kAllStabilizer: return "ALL_STABILIZER";
    case FamilyTag::kGraph: return "GRAPH";
    case FamilyTag::kDoubledGraph: return "DOUBLED_GRAPH";
    case FamilyTag::kMaxCoherent: return "MAX_COHERENT";
    case FamilyTag::kOverlapT: return "OVERLAP_T";
  }
  return "UNKNOWN";
}

FamilyTag parse_family(std::string_view name) {
  for (auto t : {FamilyTag::kAllStabilizer, FamilyTag::kGraph, FamilyTag::kDoubledGraph,
                 FamilyTag::kMaxCoherent, FamilyTag::kOverlapT}) {
    if (family_name(t) == name) return t;
  }
  fail(ErrorCode::kInvalidArgument, "unknown family " + std::string(name));
}

std::shared_ptr<const StabilizerEnumerator> shared_enumerator(int n_qubits, bool zero_offset_only) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::shared_ptr<const StabilizerEnumerator>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n_qubits, zero_offset_only}];
  if (!slot) slot = std::make_shared<StabilizerEnumerator>(n_qubits, zero_offset_only);
  return slot;
}

StateFamily::StateFamily(FamilyTag tag, int size) : tag_(tag), size_(size) {
  switch (tag) {
    case FamilyTag::kAllStabilizer:
    case FamilyTag::kOverlapT:
      if (size < 1 || size > 6) fail(ErrorCode::kSizeCapExceeded, "stabilizer family supports 1..6 qubits");
      n_ = size;
      enumerator_ = shared_enumerator(size, tag == FamilyTag::kOverlapT);
      count_ = enumerator_->size();
      break;
    case FamilyTag::kGraph:
      if (size < 1 || size > kMaxQubits) fail(ErrorCode::kSizeCapExceeded, "graph family supports 1..8 vertices");
      n_ = size;
      count_ = std::uint64_t{1} << GraphAdjacency::edge_count(size);
      break;
    case FamilyTag::kMaxCoherent:
      if (size < 1 || size > kMaxQubits) fail(ErrorCode::kSizeCapExceeded, "coherent family supports 1..8 qubits");
      n_ = size;
      count_ = (std::uint64_t{1} << GraphAdjacency::edge_count(size)) << (2 * size);
      break;
    case FamilyTag::kDoubledGraph:
      if (size < 1 || size > kMaxQubits / 2) fail(ErrorCode::kSizeCapExceeded, "doubled graphs support 1..4 vertices");
      n_ = 2 * size;
      count_ = std::uint64_t{1} << GraphAdjacency::edge_count(size);
      break;
  }
}

void coherent_amplitudes(const GraphAdjacency& a, Mask phase_word, CVector& out) {
  graph_amplitudes(a, out);
  const int m = a.num_vertices();
  for (Index b = 0; b < out.size(); ++b) {
    int e = 0;
    for (int q = 0; q < m; ++q) {
      if (b & qubit_bit(m, q)) e += (phase_word >> (2 * q)) & 3;
    }
    out(b) *= kIPow[e & 3];
  }
}

void StateFamily::amplitudes(std::uint64_t index, CVector& out) const {
  if (index >= count_) fail(ErrorCode::kInvalidArgument, "family index out of range");
  switch (tag_) {
    case FamilyTag::kAllStabilizer:
    case FamilyTag::kOverlapT:
      enumerator_->amplitudes(index, out);
      return;
    case FamilyTag::kGraph:
      graph_amplitudes(GraphAdjacency(size_, index), out);
      return;
    case FamilyTag::kMaxCoherent: {
      const Mask phases = static_cast<Mask>(index & ((std::uint64_t{1} << (2 * size_)) - 1));
      coherent_amplitudes(GraphAdjacency(size_, index >> (2 * size_)), phases, out);
      return;
    }
    case FamilyTag::kDoubledGraph: {
      CVector g;
      graph_amplitudes(GraphAdjacency(size_, index), g);
      out = kron(g, g);
      return;
    }
  }
}

StabilizerState StateFamily::state(std::uint64_t index) const {
  if (index >= count_) fail(ErrorCode::kInvalidArgument, "family index out of range");
  switch (tag_) {
    case FamilyTag::kAllStabilizer:
    case FamilyTag::kOverlapT:
      return enumerator_->state(index);
    case FamilyTag::kGraph:
      return graph_state(GraphAdjacency(size_, index));
    case FamilyTag::kMaxCoherent: {
      const Mask phases = static_cast<Mask>(index & ((std::uint64_t{1} << (2 * size_)) - 1));
      const GraphAdjacency a(size_, index >> (2 * size_));
      std::vector<PauliString> gens;
      for (int i = 0; i < size_; ++i) {
        const int k = (phases >> (2 * i)) & 3;
        const Mask b = qubit_bit(size_, i);
        gens.emplace_back(size_, b, a.neighbours(i) ^ ((k & 1) ? b : 0), k);
      }
      CVector amps;
      coherent_amplitudes(a, phases, amps);
      return StabilizerState(std::move(gens), std::move(amps));
    }
    case FamilyTag::kDoubledGraph: {
      const GraphAdjacency a(size_, index);
      std::vector<PauliString> gens;
      for (int i = 0; i < size_; ++i) {
        const Mask b = qubit_bit(size_, i);
        const Mask nb = a.neighbours(i);
        gens.emplace_back(n_, b << size_, nb << size_, 0);
        gens.emplace_back(n_, b, nb, 0);
      }
      CVector amps;
      amplitudes(index, amps);
      return StabilizerState(std::move(gens), std::move(amps));
    }
  }
  fail(ErrorCode::kInvalidArgument, "unknown family");
}

bool is_graph_ket(const CVector& psi, double tol) {
  const int m = qubits_for_dim(psi.size());
  const CVector v = normalized(psi);
  const double amp = 1.0 / std::sqrt(static_cast<double>(psi.size()));
  // Global phase fixed by the |0...0> amplitude.
  if (std::abs(v(0)) < amp - tol) return false;
  const Complex ph = std::abs(v(0)) / v(0);
  std::uint64_t bits = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Index b = qubit_bit(m, i) | qubit_bit(m, j);
      if ((v(b) * ph).real() < 0) bits |= std::uint64_t{1} << GraphAdjacency::edge_index(m, i, j);
    }
  }
  CVector g;
  graph_amplitudes(GraphAdjacency(m, bits), g);
  return (v * ph - g).cwiseAbs().maxCoeff() < tol;
}

bool is_max_coherent_ket(const CVector& psi, double tol) {
  const CVector v = normalized(psi);
  const double amp = 1.0 / std::sqrt(static_cast<double>(psi.size()));
  for (Index b = 0; b < v.size(); ++b) {
    if (std::abs(std::abs(v(b)) - amp) > tol) return false;
  }
  return is_stabilizer_ket(v, tol);
}

bool is_overlap_t_ket(const CVector& psi, double tol) {
  const CVector v = normalized(psi);
  if (std::norm(v(0)) < 1.0 / static_cast<double>(v.size()) - tol) return false;
  return is_stabilizer_ket(v, tol);
}

}  // namespace magic
