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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magic/operator.hpp"
#include "magic/sat.hpp"

namespace magic {

struct ReductionArtifact {
  SatInstance instance;
  int vertices = 0;  // n; the stage Hamiltonians act on 2n qubits
  std::vector<std::pair<int, int>> var_to_edge;
  HermitianOperator h;
  HermitianOperator h1;
  HermitianOperator h2;
  HermitianOperator h3;
  HermitianOperator h4;
  HermitianOperator w;
  double gamma = 0.0;
  double delta = 0.0;
  double norm_h_inf = 0.0;
  double norm_h3_minus_h2_inf = 0.0;
  double norm_h4_2 = 0.0;
  double norm_bound = 0.0;  // 2^4 d^7 log2(d)^6
  // Named structural checks recorded during construction (name -> value).
  std::map<std::string, double> checks;
  int stages_built = 0;  // 0: H only, 4: H..H4, 5: finalized
};

// Variable v goes to the v-th vertex pair in lexicographic order.
std::vector<std::pair<int, int>> assign_edges(int num_vars, int vertices);

// Clause Hamiltonian on two copies of n qubits.
HermitianOperator build_clause_hamiltonian(const SatInstance& instance, int vertices);

ReductionArtifact start_reduction(const SatInstance& instance, int vertices);
void build_stage_hamiltonians(ReductionArtifact& artifact);
void finalize_wwd(ReductionArtifact& artifact);
ReductionArtifact build_reduction(const SatInstance& instance, int vertices);

// Penalty operators (without prefactors) on 2n qubits.
CMatrix graph_block_penalty(int vertices);
CMatrix phase_penalty(int vertices);

// Assignment encoded by a graph on n vertices: x_v = 1 - A_{edge(v)}.
std::uint64_t assignment_from_graph(const ReductionArtifact& artifact, std::uint64_t edge_bits);
std::uint64_t graph_for_assignment(const ReductionArtifact& artifact, std::uint64_t assignment);
// Whether a 2n-vertex graph is |G(A)> (x) |G(A)> for some A.
bool is_doubled_block(int vertices, std::uint64_t edge_bits_2n);

enum class Stage { kTwoCopy, kH1Graphs, kH2Coherent, kH3Overlap, kH4Stab };

std::string_view stage_name(Stage s);
Stage parse_stage(std::string_view name);

struct VerifyOptions {
  bool exhaustive = true;
  std::uint64_t samples = 0;  // sample:N
  std::uint64_t seed = 1;
  int jobs = 1;
  bool allow_long = false;  // permits multi-hour exhaustive scans
  std::uint64_t coherent_samples = 100000;  // used by H4 family-restricted scans
};

VerifyOptions parse_verify_mode(std::string_view mode);

struct StageFamilyStat {
  std::string name;
  std::uint64_t count = 0;
  bool sampled = false;
  double min_value = 0.0;
  double max_value = 0.0;
  std::string argmin;
  std::string argmax;
};

struct VerificationReport {
  Stage stage = Stage::kTwoCopy;
  std::string mode;
  std::uint64_t seed = 0;
  bool satisfiable = false;
  std::optional<std::uint64_t> satisfying_assignment;
  std::optional<std::uint64_t> satisfying_graph;  // n-vertex edge bits
  double min_value = 0.0;
  double max_value = 0.0;
  std::vector<StageFamilyStat> families;
  std::uint64_t scanned = 0;
  bool exhaustive_coverage = false;
  // H4 stage only.
  double threshold_yes = 0.0;  // gamma + delta
  double threshold_no = 0.0;   // gamma - delta
  std::optional<double> witness_at_satisfying;
  std::uint64_t violations = 0;
  std::vector<std::string> failures;
  bool pass = false;
};

VerificationReport verify_stage(const ReductionArtifact& artifact, Stage stage, const VerifyOptions& opts);

}  // namespace magic
