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

#include "magic/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>

#include "magic/error.hpp"

namespace magic {

namespace {

class RevisedSimplex {
 public:
  // Rows are sign-flipped so that b >= 0; columns n..n+m-1 are artificials.
  RevisedSimplex(const RMatrix& a, const RVector& b, const LpOptions& opts)
      : m_(a.rows()), n_(a.cols()), opts_(opts), a_(a), b_(b) {
    for (Index i = 0; i < m_; ++i) {
      if (b_(i) < 0) {
        a_.row(i) *= -1.0;
        b_(i) = -b_(i);
      }
    }
    basis_.resize(m_);
    for (Index i = 0; i < m_; ++i) basis_[i] = n_ + i;
  }

  enum class Result { kOptimal, kUnbounded, kLimit };

  Result run(const RVector& cost, int& iterations) {
    int degenerate = 0;
    std::vector<char> in_basis(n_ + m_, 0);
    while (true) {
      factor(cost);
      std::fill(in_basis.begin(), in_basis.end(), 0);
      for (Index j : basis_) in_basis[j] = 1;
      const RVector reduced = cost.head(n_) - a_.transpose() * y_;
      Index enter = -1;
      const bool bland = degenerate >= opts_.bland_after;
      double best = -opts_.tol;
      for (Index j = 0; j < n_; ++j) {
        if (in_basis[j] || reduced(j) >= -opts_.tol) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (reduced(j) < best) {
          best = reduced(j);
          enter = j;
        }
      }
      if (enter < 0) return Result::kOptimal;
      if (iterations >= opts_.max_iterations) return Result::kLimit;
      const RVector d = lu_.solve(a_.col(enter));
      Index leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (Index i = 0; i < m_; ++i) {
        double ratio;
        if (basis_[i] >= n_ && artificial_cost_zero_ && std::abs(d(i)) > opts_.tol) {
          ratio = 0.0;  // a redundant artificial must not move off zero
        } else if (d(i) > opts_.tol) {
          ratio = std::max(0.0, xb_(i)) / d(i);
        } else {
          continue;
        }
        if (leave < 0 || ratio < best_ratio - 1e-12 ||
            (ratio <= best_ratio + 1e-12 && basis_[i] < basis_[leave])) {
          best_ratio = std::min(best_ratio, ratio);
          leave = i;
        }
      }
      if (leave < 0) return Result::kUnbounded;
      degenerate = best_ratio <= 1e-12 ? degenerate + 1 : 0;
      basis_[leave] = enter;
      ++iterations;
    }
  }

  // Swaps zero-level artificials for structural columns where possible.
  void drive_out_artificials(const RVector& cost) {
    factor(cost);
    for (Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      const RVector row = lu_.transpose().solve(RVector::Unit(m_, i));
      const RVector coeffs = a_.transpose() * row;
      Index best = -1;
      double mag = 1e-9;
      for (Index j = 0; j < n_; ++j) {
        if (std::find(basis_.begin(), basis_.end(), j) != basis_.end()) continue;
        if (std::abs(coeffs(j)) > mag) {
          mag = std::abs(coeffs(j));
          best = j;
        }
      }
      if (best >= 0) {
        basis_[i] = best;
        factor(cost);
      }
    }
    artificial_cost_zero_ = true;
  }

  RVector column(Index j) const { return j < n_ ? RVector(a_.col(j)) : RVector(RVector::Unit(m_, j - n_)); }

  void factor(const RVector& cost) {
    RMatrix bmat(m_, m_);
    RVector cb(m_);
    for (Index i = 0; i < m_; ++i) {
      bmat.col(i) = column(basis_[i]);
      cb(i) = cost(basis_[i]);
    }
    lu_.compute(bmat);
    xb_ = lu_.solve(b_);
    y_ = lu_.transpose().solve(cb);
  }

  Index m_;
  Index n_;
  LpOptions opts_;
  RMatrix a_;
  RVector b_;
  std::vector<Index> basis_;
  Eigen::FullPivLU<RMatrix> lu_;
  RVector xb_;
  RVector y_;
  bool artificial_cost_zero_ = false;
};

}  // namespace

LpSolution solve_lp(const RMatrix& a, const RVector& b, const RVector& c, const LpOptions& opts) {
  if (a.rows() != b.size() || a.cols() != c.size()) {
    fail(ErrorCode::kDimensionMismatch, "LP data dimensions disagree");
  }
  if (!a.allFinite() || !b.allFinite() || !c.allFinite()) {
    fail(ErrorCode::kNonFinite, "LP data has non-finite entries");
  }
  const Index m = a.rows();
  const Index n = a.cols();
  RevisedSimplex s(a, b, opts);
  LpSolution sol;

  RVector phase1 = RVector::Zero(n + m);
  phase1.tail(m).setOnes();
  if (s.run(phase1, sol.iterations) == RevisedSimplex::Result::kLimit) {
    sol.status = LpStatus::kIterationLimit;
    return sol;
  }
  s.factor(phase1);
  const double infeas = phase1.dot([&] {
    RVector full = RVector::Zero(n + m);
    for (Index i = 0; i < m; ++i) full(s.basis_[i]) = s.xb_(i);
    return full;
  }());
  if (infeas > 1e-8 * (1.0 + b.cwiseAbs().sum())) {
    sol.status = LpStatus::kInfeasible;
    return sol;
  }

  RVector phase2 = RVector::Zero(n + m);
  phase2.head(n) = c;
  s.drive_out_artificials(phase2);
  const auto res = s.run(phase2, sol.iterations);
  if (res == RevisedSimplex::Result::kUnbounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }
  sol.status = res == RevisedSimplex::Result::kLimit ? LpStatus::kIterationLimit : LpStatus::kOptimal;

  s.factor(phase2);
  sol.x = RVector::Zero(n);
  for (Index i = 0; i < m; ++i) {
    if (s.basis_[i] < n) sol.x(s.basis_[i]) = std::max(0.0, s.xb_(i));
  }
  // Undo the row sign flips on the dual.
  sol.y = s.y_;
  for (Index i = 0; i < m; ++i) {
    if (b(i) < 0) sol.y(i) = -sol.y(i);
  }
  sol.objective = c.dot(sol.x);
  sol.primal_residual = (a * sol.x - b).cwiseAbs().maxCoeff();
  const RVector red = c - a.transpose() * sol.y;
  sol.dual_infeasibility = std::max(0.0, -red.minCoeff());
  return sol;
}

}  // namespace magic
