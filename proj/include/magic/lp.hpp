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

#include <vector>

#include "magic/types.hpp"

namespace magic {

struct LpOptions {
  double tol = 1e-9;
  int max_iterations = 200000;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int bland_after = 50;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  RVector x;  // primal, length = columns of A
  RVector y;  // dual, length = rows of A; c - A^T y >= 0 at optimum
  int iterations = 0;
  double primal_residual = 0.0;  // ||Ax - b||_inf
  double dual_infeasibility = 0.0;  // max(0, -(c - A^T y))
};

// Two-phase revised simplex for  min c.x  s.t.  A x = b, x >= 0. The basis is
// refactorized every iteration, which is cheap for the few rows used here.
LpSolution solve_lp(const RMatrix& a, const RVector& b, const RVector& c, const LpOptions& opts = {});

}  // namespace magic
