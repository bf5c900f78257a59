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

#include <Eigen/Eigenvalues>

#include "magic/error.hpp"
#include "magic/family.hpp"
#include "magic/json_io.hpp"
#include "magic/operator.hpp"
#include "magic/reduction.hpp"
#include "magic/stabilizer.hpp"

using namespace magic;

namespace {

SatInstance single_positive() {
  return SatInstance(3, {Clause{Literal{0, false}, Literal{1, false}, Literal{2, false}}});
}

SatInstance all_patterns() {
  std::vector<Clause> cl;
  for (int m = 0; m < 8; ++m) {
    cl.push_back(Clause{Literal{0, bool(m & 1)}, Literal{1, bool(m & 2)}, Literal{2, bool(m & 4)}});
  }
  return SatInstance(3, cl);
}

double expectation(const CMatrix& h, const CVector& psi) { return psi.dot(h * psi).real(); }

}  // namespace

TEST_CASE("edge assignment") {
  const auto e = assign_edges(3, 3);
  CHECK(e == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  try {
    assign_edges(4, 3);
    FAIL("expected an error");
  } catch (const MagicError& err) {
    CHECK(err.code() == ErrorCode::kCapacityExceeded);
  }
  CHECK_THROWS_AS(build_clause_hamiltonian(single_positive(), 5), MagicError);
}

TEST_CASE("two-copy expectation equals the clause energy") {
  const auto a = start_reduction(single_positive(), 3);
  const StateFamily doubled(FamilyTag::kDoubledGraph, 3);
  CVector psi;
  // Empty graph: x = 111 satisfies the clause.
  doubled.amplitudes(0, psi);
  CHECK(std::abs(expectation(a.h.matrix(), psi)) < 1e-12);
  // Complete graph: x = 000 violates it.
  doubled.amplitudes(7, psi);
  CHECK(expectation(a.h.matrix(), psi) == doctest::Approx(1.0));
  for (std::uint64_t g = 0; g < 8; ++g) {
    doubled.amplitudes(g, psi);
    CHECK(expectation(a.h.matrix(), psi) ==
          doctest::Approx(clause_energy(a.instance, assignment_from_graph(a, g))));
    CHECK(graph_for_assignment(a, assignment_from_graph(a, g)) == g);
  }
}

TEST_CASE("penalties and norms") {
  const auto a = build_reduction(all_patterns(), 3);
  CHECK(a.checks.at("penalty1_min_eigenvalue") >= -1e-9);
  CHECK(a.checks.at("penalty2_min_eigenvalue") >= -1e-9);
  CHECK(std::abs(a.checks.at("h3_shift_trace")) < 1e-9);
  CHECK(a.norm_h_inf == doctest::Approx(32.0));
  CHECK(a.norm_h3_minus_h2_inf == doctest::Approx(33.0 * 63.0));
  CHECK(a.norm_h4_2 <= a.norm_bound);
  CHECK(schatten_norm(a.w, Schatten::kTwo) == doctest::Approx(1.0));
  CHECK(a.gamma < 0);
  CHECK(a.delta > 0);
  CHECK(a.gamma == doctest::Approx(-1 / (2 * a.norm_h4_2)));
  CHECK(a.delta == doctest::Approx(1 / (4 * 64 * a.norm_h4_2)));
}

TEST_CASE("doubled-block detection") {
  CHECK(is_doubled_block(3, 0));
  // Edge (0,1) on both copies: indices of (0,1) and (3,4) on six vertices.
  const std::uint64_t both = (std::uint64_t{1} << GraphAdjacency::edge_index(6, 0, 1)) |
                             (std::uint64_t{1} << GraphAdjacency::edge_index(6, 3, 4));
  CHECK(is_doubled_block(3, both));
  CHECK_FALSE(is_doubled_block(3, std::uint64_t{1} << GraphAdjacency::edge_index(6, 0, 1)));
  CHECK_FALSE(is_doubled_block(3, std::uint64_t{1} << GraphAdjacency::edge_index(6, 0, 3)));
}

TEST_CASE("stage verification on a satisfiable instance") {
  const auto a = build_reduction(single_positive(), 3);
  VerifyOptions ex;
  CHECK(verify_stage(a, Stage::kTwoCopy, ex).pass);
  const auto h1 = verify_stage(a, Stage::kH1Graphs, ex);
  CHECK(h1.pass);
  CHECK(h1.scanned == 32768 + 8);
  VerifyOptions sample = parse_verify_mode("sample:3000");
  sample.coherent_samples = 3000;
  CHECK(verify_stage(a, Stage::kH2Coherent, sample).pass);
  CHECK(verify_stage(a, Stage::kH3Overlap, sample).pass);
  const auto h4 = verify_stage(a, Stage::kH4Stab, sample);
  CHECK(h4.pass);
  REQUIRE(h4.witness_at_satisfying.has_value());
  CHECK(*h4.witness_at_satisfying >= h4.threshold_yes);
  CHECK_THROWS_AS(verify_stage(a, Stage::kH4Stab, ex), MagicError);
}

TEST_CASE("stage verification on an unsatisfiable instance") {
  const auto a = build_reduction(all_patterns(), 3);
  VerifyOptions ex;
  const auto two = verify_stage(a, Stage::kTwoCopy, ex);
  CHECK(two.pass);
  CHECK(two.min_value == doctest::Approx(1.0));
  CHECK(verify_stage(a, Stage::kH1Graphs, ex).pass);
  VerifyOptions sample = parse_verify_mode("sample:2000");
  CHECK(verify_stage(a, Stage::kH2Coherent, sample).pass);
  CHECK(verify_stage(a, Stage::kH3Overlap, sample).pass);
}

TEST_CASE("final witness on the unsatisfiable instance: stabilizer states near |0> exceed gamma - delta") {
  // The H4 shift lowers the energy of every state with large |0> overlap, so
  // the unsatisfiable instance does not give a NO instance for all states.
  const auto a = build_reduction(all_patterns(), 3);
  const CVector zero = basis_ket(6, 0);
  CHECK(expectation(a.w.matrix(), zero) > a.gamma - a.delta);
  CVector psi;
  StateFamily(FamilyTag::kDoubledGraph, 3).amplitudes(0, psi);
  CHECK(expectation(a.w.matrix(), psi) <= a.gamma - a.delta);
}

TEST_CASE("verify mode parsing") {
  CHECK(parse_verify_mode("exhaustive").exhaustive);
  const auto s = parse_verify_mode("sample:25");
  CHECK_FALSE(s.exhaustive);
  CHECK(s.samples == 25);
  CHECK_THROWS_AS(parse_verify_mode("sample:"), MagicError);
  CHECK_THROWS_AS(parse_verify_mode("sample:0"), MagicError);
  CHECK_THROWS_AS(parse_verify_mode("all"), MagicError);
  CHECK(parse_stage("H3_OVERLAP") == Stage::kH3Overlap);
  CHECK_THROWS_AS(parse_stage("H5"), MagicError);
}

TEST_CASE("artifacts serialize deterministically and round trip") {
  const auto a = build_reduction(single_positive(), 3);
  const auto b = build_reduction(single_positive(), 3);
  const std::string ja = artifact_to_json(a).dump();
  CHECK(ja == artifact_to_json(b).dump());
  const auto back = artifact_from_json(Json::parse(ja));
  CHECK((back.w.matrix() - a.w.matrix()).norm() == 0.0);
  CHECK((back.h4.matrix() - a.h4.matrix()).norm() == 0.0);
  CHECK(back.gamma == a.gamma);
  CHECK(back.delta == a.delta);
  CHECK(artifact_to_json(back).dump() == ja);
}
