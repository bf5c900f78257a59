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

#include "magic/pauli.hpp"
#include "magic/types.hpp"

namespace magic {

// Number of qubits for a dimension d = 2^n <= 256; throws otherwise.
int qubits_for_dim(Index dim);

class HermitianOperator {
 public:
  HermitianOperator() = default;
  // Validates ||A - A^dag||_max <= 1e-10 and stores the Hermitian part.
  explicit HermitianOperator(const CMatrix& entries);

  static HermitianOperator identity(int n_qubits);
  static HermitianOperator from_pauli(const PauliString& p);

  int num_qubits() const { return n_; }
  Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }

 protected:
  struct Trusted {};
  HermitianOperator(CMatrix entries, Trusted) : m_(std::move(entries)) {
    n_ = qubits_for_dim(m_.rows());
  }

  CMatrix m_;
  int n_ = 0;
};

class DensityMatrix : public HermitianOperator {
 public:
  DensityMatrix() = default;
  // Additionally checks unit trace and positivity, both to 1e-10.
  explicit DensityMatrix(const CMatrix& entries);

  static DensityMatrix from_ket(const CVector& psi);
  static DensityMatrix maximally_mixed(int n_qubits);

  double min_eigenvalue() const { return min_eig_; }
  double purity() const;
  bool is_pure(double tol = 1e-9) const { return purity() >= 1.0 - tol; }
  // Leading eigenvector, phase fixed so the largest entry is real positive.
  CVector dominant_ket() const;

 private:
  double min_eig_ = 0.0;
};

enum class Schatten { kOne, kTwo, kInf };

double schatten_norm(const HermitianOperator& a, Schatten p);
// Same, for a matrix the caller already knows to be Hermitian.
double schatten_norm_unchecked(const CMatrix& a, Schatten p);
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

double pauli_expectation(const PauliString& p, const DensityMatrix& rho);
Complex pauli_expectation(const PauliString& p, const CVector& psi);

// tr(P rho) for every Hermitian letter-form Pauli, indexed by pauli_index().
std::vector<double> pauli_spectrum(const CMatrix& rho);
std::vector<double> pauli_spectrum(const CVector& psi);
// Inverse map: sum_P c_P P / d.
CMatrix from_pauli_spectrum(int n_qubits, const std::vector<double>& coeffs);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);
CVector basis_ket(int n_qubits, Index index);
CVector normalized(const CVector& psi);
// Rho on (n_keep + n_traced) qubits; traces out the last n_traced.
CMatrix partial_trace_last(const CMatrix& rho, int n_keep, int n_traced);
CMatrix partial_trace_first(const CMatrix& rho, int n_traced, int n_keep);
double ket_overlap(const CVector& a, const CVector& b);
double pure_trace_distance(const CVector& a, const CVector& b);

}  // namespace magic
