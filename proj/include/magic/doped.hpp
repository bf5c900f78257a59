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
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "magic/dictionary.hpp"
#include "magic/membership.hpp"
#include "magic/monotones.hpp"
#include "magic/operator.hpp"

namespace magic {

inline constexpr const char* kNetVersion = "fib-voronoi-1";

struct DopedOptions {
  // Seeds forced into the net right after |0>, kept even if they crowd it.
  std::vector<CVector> extra_seeds;
  // Adds |T> to the extras when t = 1.
  bool include_t_state = true;
  bool use_cache = true;
  int jobs = 1;
};

struct DopedDictionary {
  int n_qubits = 0;
  int t = 0;
  double net_eps = 0.0;
  std::string net_version = kNetVersion;
  std::vector<CVector> seeds;  // t-qubit net states
  // Largest trace distance from any t-qubit pure state to the nearest seed.
  double covering_radius = 0.0;
  // Smallest pairwise trace distance between seeds (0 if fewer than two).
  double min_seed_separation = 0.0;
  bool packing_ok = true;
  std::size_t orbit_size_before_dedup = 0;
  std::shared_ptr<const Dictionary> dictionary;

  std::size_t size() const { return dictionary ? dictionary->size() : 0; }
  // log2 of 2^{2n^2+3n} (3/net_eps)^{2^{2t}}.
  double log2_cardinality_bound() const;
  bool within_cardinality_bound() const;
  // Frobenius slack between the net hull and the continuous doped hull.
  double net_coarseness() const;
};

DopedDictionary build_doped_dictionary(int n_qubits, int t, double net_eps, const DopedOptions& opts = {});

// Greedy Fibonacci-sphere packing completed to a covering; first seeds fixed.
std::vector<CVector> bloch_net(double net_eps, const std::vector<CVector>& fixed, double* covering_radius);
// Exact covering radius of a finite set of single-qubit states.
double bloch_covering_radius(const std::vector<CVector>& seeds);

struct DopedVerdict {
  MembershipVerdict verdict;
  double net_coarseness = 0.0;
  double certified_margin = 0.0;  // distance minus net coarseness
};

DopedVerdict decide_doped_membership(const DensityMatrix& rho, const DopedDictionary& dict, double eps);

RobustnessCertificate t_extended_robustness(const DensityMatrix& rho, int t, double net_eps,
                                            const DopedOptions& opts = {});

// Finds chi with C^dag psi = chi (x) |0...0> for some Clifford C on n <= 2 qubits.
std::optional<CVector> find_doped_seed(const CVector& psi, int t);

struct ClosureReport {
  int t = 0;
  double projection_norm = 0.0;
  bool projection_zero = false;
  std::optional<double> projected_distance;
  double reduced_distance = 0.0;
  bool projected_ok = false;
  bool reduced_ok = false;
  bool pass = false;
};

// psi on n + m qubits, phi a stabilizer ket on the last m; t the doping level of psi.
ClosureReport check_doped_closure(const CVector& psi, const CVector& phi, int t, double net_eps);

// Haar-random pure state.
CVector haar_state(int n_qubits, std::mt19937_64& rng);

}  // namespace magic
