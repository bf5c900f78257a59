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

#include "magic/monotones.hpp"

#include <cmath>

#include <Eigen/LU>

#include "magic/error.hpp"
#include "magic/lp.hpp"

namespace magic {

double stabilizer_renyi_entropy(const CVector& psi, double alpha) {
  if (!(alpha > 0) || alpha == 1.0 || !std::isfinite(alpha)) {
    fail(ErrorCode::kInvalidArgument, "alpha must be positive and different from 1");
  }
  const int n = qubits_for_dim(psi.size());
  const CVector v = normalized(psi);
  const auto spec = pauli_spectrum(v);
  double acc = 0.0;
  for (double c : spec) {
    const double a = std::abs(c);
    if (a > 0) acc += std::pow(a, 2.0 * alpha);
  }
  const double d = static_cast<double>(Index{1} << n);
  return std::log2(acc / d) / (1.0 - alpha);
}

double stabilizer_renyi_entropy(const DensityMatrix& psi, double alpha) {
  if (!psi.is_pure(1e-9)) {
    fail(ErrorCode::kMixedState,
         "stabilizer entropy is defined here for pure states only; mixed states need the "
         "convex-roof extension, which is not provided");
  }
  return stabilizer_renyi_entropy(psi.dominant_ket(), alpha);
}

double stabilizer_fidelity(const DensityMatrix& rho, const Dictionary& dict) {
  if (dict.num_qubits() != rho.num_qubits()) {
    fail(ErrorCode::kDimensionMismatch, "dictionary and state qubit counts differ");
  }
  return dict.expectations(rho.matrix()).maxCoeff();
}

double stabilizer_fidelity(const DensityMatrix& rho) {
  if (rho.num_qubits() > 4) fail(ErrorCode::kSizeCapExceeded, "stabilizer fidelity needs n <= 4");
  return stabilizer_fidelity(rho, *Dictionary::stabilizer(rho.num_qubits()));
}

RobustnessCertificate robustness_over(const DensityMatrix& rho, const Dictionary& dict, bool verbose) {
  if (dict.num_qubits() != rho.num_qubits()) {
    fail(ErrorCode::kDimensionMismatch, "dictionary and state qubit counts differ");
  }
  const int n = rho.num_qubits();
  const double sqrt_d = std::sqrt(static_cast<double>(Index{1} << n));
  const RMatrix a = dict.pauli_coordinates() / sqrt_d;
  const auto rho_spec = pauli_spectrum(rho.matrix());
  const RVector b = Eigen::Map<const RVector>(rho_spec.data(), static_cast<Index>(rho_spec.size())) / sqrt_d;
  const Index rows = a.rows();
  const Index cols = a.cols();

  RMatrix split(rows, 2 * cols);
  split << a, -a;
  const RVector cost = RVector::Ones(2 * cols);
  const LpSolution sol = solve_lp(split, b, cost);
  if (sol.status == LpStatus::kInfeasible) {
    Eigen::FullPivLU<RMatrix> lu(a);
    fail(ErrorCode::kInfeasible, "robustness LP infeasible: dictionary spans rank " +
                                     std::to_string(lu.rank()) + " of " + std::to_string(rows) +
                                     " (net too coarse or input not a state)");
  }
  if (sol.status != LpStatus::kOptimal) {
    fail(ErrorCode::kNumericalFailure, "robustness LP did not converge (status " + std::to_string(static_cast<int>(sol.status)) + ", iterations " + std::to_string(sol.iterations) + ", primal residual " +
                                           std::to_string(sol.primal_residual) + ")");
  }

  RobustnessCertificate cert;
  cert.dictionary_tag = dict.tag();
  cert.dictionary_size = dict.size();
  cert.iterations = sol.iterations;
  RVector x = sol.x.head(cols) - sol.x.tail(cols);
  for (Index j = 0; j < cols; ++j) {
    if (std::abs(x(j)) > 1e-13) cert.primal.emplace_back(static_cast<std::size_t>(j), x(j));
  }
  cert.value = x.cwiseAbs().sum();

  // W = sum_a y_a P_a / sqrt(d), so that tr(W sigma_j) = (A^T y)_j.
  std::vector<double> wspec(sol.y.data(), sol.y.data() + sol.y.size());
  for (auto& v : wspec) v *= sqrt_d;
  const CMatrix w = from_pauli_spectrum(n, wspec);
  cert.dual_witness = HermitianOperator((w + w.adjoint()) * 0.5);
  cert.dual_value = b.dot(sol.y);
  cert.duality_gap = std::abs(cert.value - cert.dual_value);
  cert.max_dual_constraint = (a.transpose() * sol.y).cwiseAbs().maxCoeff();
  cert.reconstruction_error = (a * x - b).norm();

  cert.verbose = verbose;
  if (verbose) {
    const LpSolution one = solve_lp(a, b, RVector::Ones(cols));
    if (one.status == LpStatus::kOptimal) cert.one_sided_value = one.objective;
  }
  return cert;
}

RobustnessCertificate robustness_of_magic(const DensityMatrix& rho, bool verbose) {
  if (rho.num_qubits() > 4) fail(ErrorCode::kSizeCapExceeded, "robustness needs n <= 4");
  return robustness_over(rho, *Dictionary::stabilizer(rho.num_qubits()), verbose);
}

}  // namespace magic
