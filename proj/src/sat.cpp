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

#include "magic/sat.hpp"

#include <sstream>

#include "magic/error.hpp"

namespace magic {

SatInstance::SatInstance(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars < 0) fail(ErrorCode::kInvalidArgument, "negative variable count");
  for (const auto& c : clauses_) {
    for (int i = 0; i < 3; ++i) {
      if (c[i].var < 0 || c[i].var >= num_vars_) {
        fail(ErrorCode::kLiteralOutOfRange, "literal variable " + std::to_string(c[i].var + 1) + " out of range");
      }
      for (int j = 0; j < i; ++j) {
        if (c[i].var == c[j].var) {
          fail(ErrorCode::kDuplicateVariable, "variable " + std::to_string(c[i].var + 1) + " repeated in a clause");
        }
      }
    }
  }
}

std::string SatInstance::to_dimacs() const {
  std::ostringstream os;
  os << "p cnf " << num_vars_ << ' ' << clauses_.size() << '\n';
  for (const auto& c : clauses_) {
    for (const auto& l : c) os << (l.negated ? -(l.var + 1) : l.var + 1) << ' ';
    os << "0\n";
  }
  return os.str();
}

SatInstance parse_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int num_vars = -1;
  long declared = -1;
  std::vector<Clause> clauses;
  std::vector<long> pending;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c' || line[first] == '%') continue;
    std::istringstream ls(line);
    if (line[first] == 'p') {
      std::string p;
      std::string fmt;
      if (!(ls >> p >> fmt >> num_vars >> declared) || fmt != "cnf" || num_vars < 0 || declared < 0) {
        fail(ErrorCode::kMalformedHeader, "malformed DIMACS header: " + line);
      }
      continue;
    }
    if (num_vars < 0) fail(ErrorCode::kMalformedHeader, "clause before DIMACS header");
    std::string tok;
    while (ls >> tok) {
      long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(ErrorCode::kMalformedFile, "bad literal token '" + tok + "'");
      }
      if (lit == 0) {
        if (pending.size() != 3) {
          fail(ErrorCode::kWrongWidth, "clause has " + std::to_string(pending.size()) + " literals, expected 3");
        }
        Clause c;
        for (int i = 0; i < 3; ++i) {
          const long v = pending[i] < 0 ? -pending[i] : pending[i];
          if (v > num_vars) fail(ErrorCode::kLiteralOutOfRange, "literal " + std::to_string(pending[i]) + " out of range");
          c[i] = Literal{static_cast<int>(v - 1), pending[i] < 0};
        }
        clauses.push_back(c);
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
  }
  if (num_vars < 0) fail(ErrorCode::kMalformedHeader, "missing DIMACS header");
  if (!pending.empty()) fail(ErrorCode::kWrongWidth, "unterminated clause");
  if (static_cast<long>(clauses.size()) != declared) {
    fail(ErrorCode::kMalformedHeader, "header declares " + std::to_string(declared) + " clauses, found " +
                                          std::to_string(clauses.size()));
  }
  return SatInstance(num_vars, std::move(clauses));
}

int clause_energy(const SatInstance& instance, std::uint64_t assignment) {
  int violated = 0;
  for (const auto& c : instance.clauses()) {
    bool sat = false;
    for (const auto& l : c) {
      const bool x = (assignment >> l.var) & 1;
      if (x != l.negated) sat = true;
    }
    if (!sat) ++violated;
  }
  return violated;
}

int clause_energy(const SatInstance& instance, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != instance.num_vars()) {
    fail(ErrorCode::kDimensionMismatch, "assignment length differs from variable count");
  }
  std::uint64_t bits = 0;
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    if (assignment[v]) bits |= std::uint64_t{1} << v;
  }
  return clause_energy(instance, bits);
}

std::optional<std::uint64_t> brute_force_sat(const SatInstance& instance) {
  if (instance.num_vars() > 30) fail(ErrorCode::kSizeCapExceeded, "brute force limited to 30 variables");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << instance.num_vars()); ++a) {
    if (clause_energy(instance, a) == 0) return a;
  }
  return std::nullopt;
}

}  // namespace magic
