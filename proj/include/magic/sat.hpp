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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace magic {

struct Literal {
  int var = 0;  // zero-based
  bool negated = false;

  bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

class SatInstance {
 public:
  SatInstance() = default;
  // Validates variable ranges and distinct variables within each clause.
  SatInstance(int num_vars, std::vector<Clause> clauses);

  int num_vars() const { return num_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  std::string to_dimacs() const;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

SatInstance parse_cnf(std::string_view text);

// Number of violated clauses; bit v of the assignment is variable v.
int clause_energy(const SatInstance& instance, const std::vector<int>& assignment);
int clause_energy(const SatInstance& instance, std::uint64_t assignment);

// First satisfying assignment in increasing order, if any (num_vars <= 30).
std::optional<std::uint64_t> brute_force_sat(const SatInstance& instance);

}  // namespace magic
