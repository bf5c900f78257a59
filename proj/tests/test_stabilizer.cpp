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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "magic/error.hpp"
#include "magic/family.hpp"
#include "magic/operator.hpp"
#include "magic/stabilizer.hpp"

using namespace magic;

TEST_CASE("closed-form stabilizer counts") {
  CHECK(stabilizer_count(1) == 6);
  CHECK(stabilizer_count(2) == 60);
  CHECK(stabilizer_count(3) == 1080);
  CHECK(stabilizer_count(4) == 36720);
  for (int n = 1; n <= 5; ++n) CHECK(StabilizerEnumerator(n).size() == stabilizer_count(n));
}

TEST_CASE("enumerated states are valid and distinct") {
  for (int n = 1; n <= 2; ++n) {
    const auto states = enumerate_stabilizer_states(n);
    for (std::size_t i = 0; i < states.size(); ++i) {
      CHECK(std::abs(states[i].amplitudes().norm() - 1.0) < 1e-12);
      for (const auto& g : states[i].generators()) {
        const CVector v = g.dense() * states[i].amplitudes();
        CHECK((v - states[i].amplitudes()).norm() < 1e-10);
      }
      for (std::size_t j = 0; j < i; ++j) CHECK(ket_overlap(states[i].amplitudes(), states[j].amplitudes()) < 1 - 1e-9);
    }
  }
}

TEST_CASE("generator validation") {
  const CVector zero = basis_ket(1, 0);
  CHECK_NOTHROW(StabilizerState({PauliString::parse("Z")}, zero));
  CHECK_THROWS_AS(StabilizerState({PauliString::parse("-Z")}, zero), MagicError);
  CHECK_THROWS_AS(StabilizerState({PauliString::parse("XI"), PauliString::parse("ZI")}, basis_ket(2, 0)),
                  MagicError);
  CHECK_THROWS_AS(StabilizerState({PauliString::parse("ZI"), PauliString::parse("ZI")}, basis_ket(2, 0)),
                  MagicError);
}

TEST_CASE("from_ket recovers generators and rejects magic states") {
  CVector bell = CVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const auto s = StabilizerState::from_ket(bell);
  CHECK(s.generators().size() == 2);
  CHECK(is_stabilizer_ket(bell));
  CVector t(2);
  t << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), std::numbers::pi / 4);
  CHECK_FALSE(is_stabilizer_ket(t));
  CHECK_THROWS_AS(StabilizerState::from_ket(t), MagicError);
}

TEST_CASE("graph states follow the CZ definition") {
  // Two vertices joined by an edge: CZ |++>.
  const GraphAdjacency g(2, 1);
  CVector psi;
  graph_amplitudes(g, psi);
  CHECK(std::abs(psi(3) + 0.5) < 1e-12);
  CHECK(std::abs(psi(0) - 0.5) < 1e-12);
  CHECK(GraphAdjacency::edge_index(4, 0, 1) == 0);
  CHECK(GraphAdjacency::edge_index(4, 2, 3) == 5);
  CHECK(GraphAdjacency::edge_vertices(4, 3) == std::pair<int, int>(1, 2));
}

TEST_CASE("family sizes") {
  CHECK(StateFamily(FamilyTag::kAllStabilizer, 3).count() == 1080);
  CHECK(StateFamily(FamilyTag::kGraph, 3).count() == 8);
  CHECK(StateFamily(FamilyTag::kGraph, 6).count() == 32768);
  CHECK(StateFamily(FamilyTag::kDoubledGraph, 3).count() == 8);
  CHECK(StateFamily(FamilyTag::kMaxCoherent, 2).count() == 2 * 16);
  CHECK(StateFamily(FamilyTag::kOverlapT, 1).count() == 5);
  CHECK_THROWS_AS(StateFamily(FamilyTag::kAllStabilizer, 7), MagicError);
  CHECK(parse_family("OVERLAP_T") == FamilyTag::kOverlapT);
  CHECK_THROWS_AS(parse_family("NOPE"), MagicError);
}

TEST_CASE("family members satisfy their predicates") {
  CVector psi;
  const StateFamily graphs(FamilyTag::kGraph, 4);
  for (std::uint64_t i = 0; i < graphs.count(); ++i) {
    graphs.amplitudes(i, psi);
    CHECK(is_graph_ket(psi));
  }
  const StateFamily coherent(FamilyTag::kMaxCoherent, 2);
  for (std::uint64_t i = 0; i < coherent.count(); ++i) {
    coherent.amplitudes(i, psi);
    CHECK(is_max_coherent_ket(psi));
    CHECK(is_stabilizer_ket(psi));
  }
  const StateFamily overlap(FamilyTag::kOverlapT, 3);
  std::uint64_t with_zero = 0;
  const StateFamily all(FamilyTag::kAllStabilizer, 3);
  for (std::uint64_t i = 0; i < all.count(); ++i) {
    all.amplitudes(i, psi);
    if (std::norm(psi(0)) > 1e-12) ++with_zero;
  }
  CHECK(overlap.count() == with_zero);
  for (std::uint64_t i = 0; i < overlap.count(); ++i) {
    overlap.amplitudes(i, psi);
    CHECK(is_overlap_t_ket(psi));
  }
}

TEST_CASE("doubled graph states are G(x)G") {
  const StateFamily doubled(FamilyTag::kDoubledGraph, 3);
  CVector psi, g;
  for (std::uint64_t i = 0; i < doubled.count(); ++i) {
    doubled.amplitudes(i, psi);
    graph_amplitudes(GraphAdjacency(3, i), g);
    CHECK((psi - kron(g, g)).norm() < 1e-12);
  }
}

TEST_CASE("random index ranges are reproducible") {
  const StateFamily all(FamilyTag::kAllStabilizer, 5);
  std::mt19937_64 rng(5);
  CVector a, b;
  for (int k = 0; k < 50; ++k) {
    const std::uint64_t i = rng() % all.count();
    all.amplitudes(i, a);
    all.amplitudes(i, b);
    CHECK((a - b).norm() == 0.0);
    CHECK(is_stabilizer_ket(a));
  }
}
