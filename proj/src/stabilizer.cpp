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

#include "magic/stabilizer.hpp"

#include <algorithm>
#include <cmath>

#include "magic/error.hpp"
#include "magic/operator.hpp"

namespace magic {

namespace {

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int pair_index(int k, int a, int b) {
  // a < b < k, lexicographic.
  return a * (2 * k - a - 1) / 2 + (b - a - 1);
}

}  // namespace

StabilizerState::StabilizerState(std::vector<PauliString> generators, CVector amplitudes)
    : generators_(std::move(generators)), amps_(std::move(amplitudes)) {
  n_ = qubits_for_dim(amps_.size());
  if (static_cast<int>(generators_.size()) != n_) {
    fail(ErrorCode::kInvalidArgument, "stabilizer state needs exactly n generators");
  }
  if (std::abs(amps_.norm() - 1.0) > kHermitianTol) {
    fail(ErrorCode::kInvalidArgument, "stabilizer amplitudes are not normalized");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.num_qubits() != n_) fail(ErrorCode::kDimensionMismatch, "generator size mismatch");
    if (!g.is_hermitian()) fail(ErrorCode::kInvalidArgument, "generator not Hermitian");
    if (g.is_identity() && g.sign_exp() == 2) fail(ErrorCode::kInvalidArgument, "-I generator");
    for (std::size_t j = 0; j < i; ++j) {
      if (!g.commutes_with(generators_[j])) {
        fail(ErrorCode::kInvalidArgument, "generators do not commute");
      }
    }
  }
  if (symplectic_rank(generators_) != n_) {
    fail(ErrorCode::kInvalidArgument, "generators are not independent");
  }
  CVector tmp;
  for (const auto& g : generators_) {
    g.apply(amps_, tmp);
    if ((tmp - amps_).cwiseAbs().maxCoeff() > kHermitianTol) {
      fail(ErrorCode::kInvalidArgument, "amplitudes not stabilized by " + g.str());
    }
  }
}

StabilizerState StabilizerState::from_ket(const CVector& psi) {
  const int n = qubits_for_dim(psi.size());
  const CVector v = normalized(psi);
  const auto spec = pauli_spectrum(v);
  const Mask d = Mask{1} << n;
  std::vector<PauliString> gens;
  std::vector<std::uint64_t> reduced;
  int found = 0;
  for (Mask x = 0; x < d; ++x) {
    for (Mask z = 0; z < d; ++z) {
      const double e = spec[pauli_index(n, x, z)];
      if (std::abs(e) < 1.0 - 1e-9) continue;
      ++found;
      if (x == 0 && z == 0) continue;
      std::uint64_t vec = (static_cast<std::uint64_t>(x) << 32) | z;
      for (auto r : reduced) vec = std::min(vec, vec ^ r);
      if (vec == 0 || static_cast<int>(gens.size()) == n) continue;
      reduced.push_back(vec);
      std::sort(reduced.rbegin(), reduced.rend());
      PauliString p = PauliString::hermitian(n, x, z);
      gens.push_back(e > 0 ? p : p.negated());
    }
  }
  if (found != static_cast<int>(d) || static_cast<int>(gens.size()) != n) {
    fail(ErrorCode::kInvalidArgument, "state is not a stabilizer state");
  }
  return StabilizerState(std::move(gens), v);
}

GraphAdjacency::GraphAdjacency(int n_vertices, std::uint64_t edge_bits)
    : m_(n_vertices), bits_(edge_bits) {
  if (n_vertices < 1 || n_vertices > kMaxQubits) {
    fail(ErrorCode::kInvalidArgument, "graph size out of range");
  }
  const int e = edge_count(n_vertices);
  if (e < 64 && (edge_bits >> e) != 0) fail(ErrorCode::kInvalidArgument, "edge bits out of range");
}

int GraphAdjacency::edge_index(int n_vertices, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j || i < 0 || j >= n_vertices) fail(ErrorCode::kInvalidArgument, "bad edge");
  return pair_index(n_vertices, i, j);
}

std::pair<int, int> GraphAdjacency::edge_vertices(int n_vertices, int index) {
  for (int i = 0; i < n_vertices; ++i) {
    for (int j = i + 1; j < n_vertices; ++j) {
      if (pair_index(n_vertices, i, j) == index) return {i, j};
    }
  }
  fail(ErrorCode::kInvalidArgument, "edge index out of range");
}

bool GraphAdjacency::has_edge(int i, int j) const {
  if (i == j) return false;
  return (bits_ >> edge_index(m_, i, j)) & 1;
}

Mask GraphAdjacency::neighbours(int i) const {
  Mask m = 0;
  for (int j = 0; j < m_; ++j) {
    if (has_edge(i, j)) m |= qubit_bit(m_, j);
  }
  return m;
}

void graph_amplitudes(const GraphAdjacency& a, CVector& out) {
  const int m = a.num_vertices();
  const Index d = Index{1} << m;
  std::array<Mask, kMaxQubits> upper{};
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (a.has_edge(i, j)) upper[i] |= qubit_bit(m, j);
    }
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  out.resize(d);
  for (Index b = 0; b < d; ++b) {
    int q = 0;
    for (int i = 0; i < m; ++i) {
      if (b & qubit_bit(m, i)) q += popcount(upper[i] & static_cast<Mask>(b));
    }
    out(b) = (q & 1) ? -amp : amp;
  }
}

StabilizerState graph_state(const GraphAdjacency& a) {
  const int m = a.num_vertices();
  std::vector<PauliString> gens;
  for (int i = 0; i < m; ++i) gens.emplace_back(m, qubit_bit(m, i), a.neighbours(i), 0);
  CVector amps;
  graph_amplitudes(a, amps);
  return StabilizerState(std::move(gens), std::move(amps));
}

double state_overlap(const StabilizerState& s, const StabilizerState& t) {
  if (s.num_qubits() != t.num_qubits()) fail(ErrorCode::kDimensionMismatch, "overlap qubit mismatch");
  return ket_overlap(s.amplitudes(), t.amplitudes());
}

StabilizerEnumerator::StabilizerEnumerator(int n_qubits, bool zero_offset_only)
    : n_(n_qubits), zero_only_(zero_offset_only) {
  if (n_qubits < 1 || n_qubits > 6) {
    fail(ErrorCode::kSizeCapExceeded, "stabilizer enumeration supports 1..6 qubits");
  }
  for (int k = 0; k <= n_; ++k) {
    const std::uint64_t per = (std::uint64_t{1} << (2 * k)) << (k * (k - 1) / 2);
    for (Mask piv = 0; piv < (Mask{1} << n_); ++piv) {
      if (popcount(piv) != k) continue;
      std::array<int, kMaxQubits> pivots{};
      int idx = 0;
      for (int bit = n_ - 1; bit >= 0; --bit) {
        if (piv & (Mask{1} << bit)) pivots[idx++] = bit;
      }
      std::array<Mask, kMaxQubits> free_masks{};
      int total_free = 0;
      for (int j = 0; j < k; ++j) {
        free_masks[j] = ((Mask{1} << pivots[j]) - 1) & ~piv;
        total_free += popcount(free_masks[j]);
      }
      std::vector<Mask> offsets;
      if (zero_only_) {
        offsets.push_back(0);
      } else {
        const Mask nonpiv = ((Mask{1} << n_) - 1) & ~piv;
        for (Mask t = 0; t < (Mask{1} << n_); ++t) {
          if ((t & ~nonpiv) == 0) offsets.push_back(t);
        }
      }
      for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << total_free); ++fill) {
        Subspace s;
        s.k = k;
        s.pivots = pivots;
        std::uint64_t rest = fill;
        for (int j = 0; j < k; ++j) {
          Mask row = Mask{1} << pivots[j];
          for (int bit = 0; bit < n_; ++bit) {
            if (free_masks[j] & (Mask{1} << bit)) {
              if (rest & 1) row |= Mask{1} << bit;
              rest >>= 1;
            }
          }
          s.rows[j] = row;
        }
        s.offsets = offsets;
        s.per_offset = per;
        prefix_.push_back(total_);
        total_ += per * offsets.size();
        subspaces_.push_back(std::move(s));
      }
    }
  }
}

StabilizerEnumerator::Params StabilizerEnumerator::decode(std::uint64_t index) const {
  if (index >= total_) fail(ErrorCode::kInvalidArgument, "stabilizer index out of range");
  const auto it = std::upper_bound(prefix_.begin(), prefix_.end(), index) - 1;
  const Subspace& s = subspaces_[it - prefix_.begin()];
  std::uint64_t local = index - *it;
  Params p{};
  p.sub = &s;
  const int qbits = s.k * (s.k - 1) / 2;
  p.q = local & ((std::uint64_t{1} << qbits) - 1);
  local >>= qbits;
  p.l = static_cast<Mask>(local & ((std::uint64_t{1} << s.k) - 1));
  local >>= s.k;
  p.c = static_cast<Mask>(local & ((std::uint64_t{1} << s.k) - 1));
  local >>= s.k;
  p.offset = s.offsets[local];
  return p;
}

void StabilizerEnumerator::amplitudes(std::uint64_t index, CVector& out) const {
  const Params p = decode(index);
  const Subspace& s = *p.sub;
  const int k = s.k;
  out.setZero(Index{1} << n_);
  const double amp = std::pow(2.0, -0.5 * k);
  for (Mask y = 0; y < (Mask{1} << k); ++y) {
    Mask b = p.offset;
    int quad = popcount(p.c & y);
    for (int a = 0; a < k; ++a) {
      if (!((y >> a) & 1)) continue;
      b ^= s.rows[a];
      for (int c = a + 1; c < k; ++c) {
        if (((y >> c) & 1) && ((p.q >> pair_index(k, a, c)) & 1)) ++quad;
      }
    }
    const int e = (popcount(p.l & y) + 2 * quad) & 3;
    out(b) = amp * kIPow[e];
  }
}

StabilizerState StabilizerEnumerator::state(std::uint64_t index) const {
  const Params p = decode(index);
  const Subspace& s = *p.sub;
  const int k = s.k;
  std::vector<PauliString> gens;
  // X-type generators, one per basis row.
  for (int j = 0; j < k; ++j) {
    const int lj = (p.l >> j) & 1;
    const int cj = (p.c >> j) & 1;
    Mask z = lj ? (Mask{1} << s.pivots[j]) : 0;
    for (int b = 0; b < k; ++b) {
      if (b == j) continue;
      const int a0 = std::min(b, j);
      const int a1 = std::max(b, j);
      if ((p.q >> pair_index(k, a0, a1)) & 1) z |= Mask{1} << s.pivots[b];
    }
    gens.emplace_back(n_, s.rows[j], z, lj + 2 * cj);
  }
  // Z-type generators from the annihilator of span(R).
  std::vector<Mask> found;
  for (Mask h = 1; h < (Mask{1} << n_) && static_cast<int>(found.size()) < n_ - k; ++h) {
    bool orth = true;
    for (int j = 0; j < k && orth; ++j) orth = !parity(h & s.rows[j]);
    if (!orth) continue;
    Mask red = h;
    for (Mask f : found) red = std::min(red, red ^ f);
    if (red == 0) continue;
    found.push_back(red);
    std::sort(found.rbegin(), found.rend());
    gens.emplace_back(n_, 0, h, parity(h & p.offset) ? 2 : 0);
  }
  CVector amps;
  amplitudes(index, amps);
  return StabilizerState(std::move(gens), std::move(amps));
}

std::uint64_t stabilizer_count(int n_qubits) {
  std::uint64_t c = std::uint64_t{1} << n_qubits;
  for (int k = 1; k <= n_qubits; ++k) c *= (std::uint64_t{1} << k) + 1;
  return c;
}

std::vector<StabilizerState> enumerate_stabilizer_states(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 4) {
    fail(ErrorCode::kSizeCapExceeded, "full materialization supports 1..4 qubits");
  }
  StabilizerEnumerator e(n_qubits);
  std::vector<StabilizerState> out;
  out.reserve(e.size());
  for (std::uint64_t i = 0; i < e.size(); ++i) out.push_back(e.state(i));
  return out;
}

bool is_stabilizer_ket(const CVector& psi, double tol) {
  const auto spec = pauli_spectrum(normalized(psi));
  const std::size_t d = static_cast<std::size_t>(psi.size());
  std::size_t ones = 0;
  for (double v : spec) {
    const double a = std::abs(v);
    if (a > 1.0 - tol) {
      ++ones;
    } else if (a > tol) {
      return false;
    }
  }
  return ones == d;
}

}  // namespace magic
