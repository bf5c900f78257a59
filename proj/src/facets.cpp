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

#include <cmath>
#include <vector>

#include <Eigen/LU>

#include "magic/error.hpp"
#include "magic/lp.hpp"
#include "magic/membership.hpp"

namespace magic {

namespace {

constexpr double kMaxFacetSubsets = 2e5;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// min over facets of the slack h - u.r, facets found from vertex subsets.
double facet_margin(const RMatrix& p, const RVector& r) {
  const Index dim = p.rows();
  const Index cols = p.cols();
  std::vector<Index> pick(dim);
  for (Index i = 0; i < dim; ++i) pick[i] = i;
  double margin = 1e300;
  while (true) {
    RMatrix m(dim, dim + 1);
    for (Index i = 0; i < dim; ++i) {
      m.row(i).head(dim) = p.col(pick[i]).transpose();
      m(i, dim) = -1.0;
    }
    Eigen::FullPivLU<RMatrix> lu(m);
    const RMatrix ker = lu.kernel();
    if (ker.cols() == 1) {
      RVector u = ker.col(0).head(dim);
      double h = ker(dim, 0);
      const double un = u.norm();
      if (un > 1e-12) {
        u /= un;
        h /= un;
        const RVector vals = p.transpose() * u - RVector::Constant(cols, h);
        if (vals.maxCoeff() <= 1e-9 || vals.minCoeff() >= -1e-9) {
          if (vals.maxCoeff() > 1e-9) {
            u = -u;
            h = -h;
          }
          margin = std::min(margin, h - u.dot(r));
        }
      }
    }
    Index i = dim - 1;
    while (i >= 0 && pick[i] == cols - dim + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (Index j = i + 1; j < dim; ++j) pick[j] = pick[j - 1] + 1;
  }
  return margin;
}

}  // namespace

double cross_polytope_inradius(int n_qubits) {
  const double d = static_cast<double>(Index{1} << n_qubits);
  return 1.0 / std::sqrt(d * (d * d - 1.0));
}

InteriorMargin interior_margin(const DensityMatrix& rho, const Dictionary& dict) {
  if (dict.num_qubits() != rho.num_qubits()) {
    fail(ErrorCode::kDimensionMismatch, "dictionary and state qubit counts differ");
  }
  const Index d = rho.dim();
  const double sqrt_d = std::sqrt(static_cast<double>(d));
  const auto spec = pauli_spectrum(rho.matrix());
  const RVector full = Eigen::Map<const RVector>(spec.data(), static_cast<Index>(spec.size())) / sqrt_d;
  const RMatrix coords = dict.pauli_coordinates() / sqrt_d;
  const Index dim = d * d - 1;

  InteriorMargin out;
  if (binomial(static_cast<int>(dict.size()), static_cast<int>(dim)) <= kMaxFacetSubsets) {
    out.value = std::max(0.0, facet_margin(coords.bottomRows(dim), full.tail(dim)));
    out.exact = true;
    return out;
  }

  // Gauge of rho about I/d: the largest t with I/d + t (rho - I/d) in the hull.
  RVector center = RVector::Zero(d * d);
  center(0) = 1.0 / sqrt_d;
  const RVector dir = full - center;
  double s = 0.0;
  if (dir.norm() > 1e-14) {
    const Index cols = coords.cols();
    RMatrix a(d * d, cols + 1);
    a << coords, -dir;
    RVector c = RVector::Zero(cols + 1);
    c(cols) = -1.0;
    const LpSolution sol = solve_lp(a, center, c);
    if (sol.status == LpStatus::kOptimal) {
      const double t = sol.x(cols);
      s = t > 0 ? 1.0 / t : 1e300;
    } else if (sol.status == LpStatus::kInfeasible) {
      s = 1e300;
    }
  }
  out.value = std::max(0.0, 1.0 - s) * cross_polytope_inradius(rho.num_qubits());
  out.exact = false;
  return out;
}

}  // namespace magic
