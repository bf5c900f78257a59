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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magic/dictionary.hpp"
#include "magic/operator.hpp"

namespace magic {

// M_alpha for a pure state; throws kMixedState on mixed input.
double stabilizer_renyi_entropy(const DensityMatrix& psi, double alpha);
double stabilizer_renyi_entropy(const CVector& psi, double alpha);

// max over pure stabilizer states of <s|rho|s>; n <= 4.
double stabilizer_fidelity(const DensityMatrix& rho);
double stabilizer_fidelity(const DensityMatrix& rho, const Dictionary& dict);

struct RobustnessCertificate {
  double value = 0.0;
  std::vector<std::pair<std::size_t, double>> primal;  // dictionary index -> coefficient
  HermitianOperator dual_witness;
  double dual_value = 0.0;         // tr(W rho)
  double duality_gap = 0.0;
  double max_dual_constraint = 0.0;  // max_j |tr(W sigma_j)|
  double reconstruction_error = 0.0;  // ||sum x_j sigma_j - rho||_2
  std::string dictionary_tag;
  std::size_t dictionary_size = 0;
  int iterations = 0;
  // Value of the program with nonnegative weights only; empty when that
  // program is infeasible (its dual, the one-sided form, is unbounded).
  std::optional<double> one_sided_value;
  bool verbose = false;
};

RobustnessCertificate robustness_of_magic(const DensityMatrix& rho, bool verbose = false);
RobustnessCertificate robustness_over(const DensityMatrix& rho, const Dictionary& dict, bool verbose = false);

}  // namespace magic
