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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magic/dictionary.hpp"
#include "magic/family.hpp"
#include "magic/operator.hpp"

namespace magic {

enum class Decision { kYes, kNo, kPromiseViolated };

std::string_view decision_name(Decision d);

// Distances at or below this are treated as membership.
inline constexpr double kZeroDistance = 1e-8;

struct MembershipVerdict {
  double distance = 0.0;  // Frobenius distance to the hull
  DensityMatrix projection;
  std::vector<std::pair<std::size_t, double>> weights;
  double optimality_gap = 0.0;  // Wolfe gap at termination
  int iterations = 0;
  std::string dictionary_tag;
  std::optional<Decision> decision;
  double eps = 0.0;
  // Radius of the largest ball around rho inside the hull (trace-one plane).
  std::optional<double> interior_margin;
  bool interior_margin_exact = false;
};

MembershipVerdict project_onto_polytope(const DensityMatrix& rho, const Dictionary& dict);

struct InteriorMargin {
  double value = 0.0;
  bool exact = false;
};

// Exact by facet enumeration when the vertex count is small enough (single
// qubit); otherwise a certified lower bound that assumes dict contains the
// stabilizer polytope.
InteriorMargin interior_margin(const DensityMatrix& rho, const Dictionary& dict);

// Frobenius inradius lower bound about I/d from the Pauli cross-polytope.
double cross_polytope_inradius(int n_qubits);

// Weak membership in the stabilizer polytope with the strict-interior YES rule.
MembershipVerdict decide_wmem(const DensityMatrix& rho, double eps);
MembershipVerdict decide_wmem(const DensityMatrix& rho, double eps, const Dictionary& dict);

// YES when the distance vanishes, NO when it exceeds eps, PROMISE_VIOLATED otherwise.
Decision classify_by_distance(double distance, double eps);

struct WitnessReport {
  HermitianOperator witness;
  double margin = 0.0;
  double gamma = 0.0;
  double value_on_rho = 0.0;
};

WitnessReport extract_witness(const DensityMatrix& rho, const MembershipVerdict& verdict,
                              const Dictionary& dict);

struct WwdScan {
  std::vector<StateFamily> families;
  std::uint64_t samples = 0;  // uniform random stabilizer states
  std::uint64_t seed = 0;
  std::vector<CVector> extra_states;
  std::vector<std::string> extra_labels;
  // The extra states form the whole dictionary of interest.
  bool extra_complete = false;
  int jobs = 1;
};

struct WwdFamilyStat {
  std::string name;
  std::uint64_t count = 0;
  double max_value = 0.0;
  double min_value = 0.0;
};

struct WwdResult {
  Decision decision = Decision::kPromiseViolated;
  double max_value = 0.0;
  double min_value = 0.0;
  std::uint64_t scanned = 0;
  bool exhaustive = false;
  std::string argmax_label;
  CVector argmax;
  std::vector<WwdFamilyStat> families;
};

WwdResult check_wwd_instance(const HermitianOperator& w, double gamma, double delta, const WwdScan& scan);

// max/min of <psi|W|psi> over a family index range, with argmax index.
struct FamilyScan {
  double max_value = -1e300;
  double min_value = 1e300;
  std::uint64_t argmax = 0;
  std::uint64_t argmin = 0;
};
FamilyScan scan_family(const CMatrix& w, const StateFamily& family, int jobs);

}  // namespace magic
