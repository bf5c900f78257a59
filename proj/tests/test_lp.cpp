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

#include "magic/error.hpp"
#include "magic/lp.hpp"
#include "magic/operator.hpp"

using namespace magic;

TEST_CASE("small LP with a known optimum") {
  // min x0 + 2 x1 + 3 x2  s.t.  x0 + x1 + x2 = 1, x1 - x2 = 0.2
  RMatrix a(2, 3);
  a << 1, 1, 1, 0, 1, -1;
  RVector b(2);
  b << 1, 0.2;
  RVector c(3);
  c << 1, 2, 3;
  const auto sol = solve_lp(a, b, c);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == doctest::Approx(1.2));
  CHECK(sol.primal_residual < 1e-12);
  CHECK(sol.dual_infeasibility < 1e-12);
  CHECK(b.dot(sol.y) == doctest::Approx(sol.objective));
}

TEST_CASE("infeasible and unbounded programs are reported") {
  RMatrix a(1, 2);
  a << 1, 1;
  RVector b(1);
  b << -1;
  RVector c(2);
  c << 1, 1;
  CHECK(solve_lp(a, b, c).status == LpStatus::kInfeasible);
  RMatrix a2(1, 2);
  a2 << 1, -1;
  RVector b2(1);
  b2 << 0;
  RVector c2(2);
  c2 << -1, 0;
  CHECK(solve_lp(a2, b2, c2).status == LpStatus::kUnbounded);
}

TEST_CASE("redundant rows and negative right-hand sides") {
  RMatrix a(3, 3);
  a << 1, 1, 0, 2, 2, 0, 0, -1, -1;
  RVector b(3);
  b << 1, 2, -0.5;
  RVector c(3);
  c << 1, 0, 1;
  const auto sol = solve_lp(a, b, c);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == doctest::Approx(0.5));
  CHECK(sol.primal_residual < 1e-12);
  CHECK(b.dot(sol.y) == doctest::Approx(sol.objective).epsilon(1e-9));
}

TEST_CASE("dimension mismatch") {
  CHECK_THROWS_AS(solve_lp(RMatrix::Zero(2, 2), RVector::Zero(3), RVector::Zero(2)), MagicError);
}
