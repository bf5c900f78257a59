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

#include "magic/operator.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "magic/error.hpp"

namespace magic {

namespace {

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_finite(const CMatrix& m) {
  if (!m.allFinite()) fail(ErrorCode::kNonFinite, "operator has non-finite entries");
}

// In-place Walsh-Hadamard transform: f(z) <- sum_b (-1)^{z.b} f(b).
void walsh_hadamard(std::vector<Complex>& f) {
  const std::size_t n = f.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const Complex a = f[j];
        const Complex b = f[j + h];
        f[j] = a + b;
        f[j + h] = a - b;
      }
    }
  }
}

template <class Getter>
std::vector<double> spectrum_impl(int n, Getter entry) {
  const std::size_t d = std::size_t{1} << n;
  std::vector<double> out(d * d);
  std::vector<Complex> f(d);
  for (Mask x = 0; x < d; ++x) {
    for (Mask b = 0; b < d; ++b) f[b] = entry(b, b ^ x);
    walsh_hadamard(f);
    for (Mask z = 0; z < d; ++z) {
      out[pauli_index(n, x, z)] = (kIPow[popcount(x & z) & 3] * f[z]).real();
    }
  }
  return out;
}

}  // namespace

int qubits_for_dim(Index dim) {
  if (dim < 2 || dim > (Index{1} << kMaxQubits) || (dim & (dim - 1)) != 0) {
    fail(ErrorCode::kSizeCapExceeded,
         "dimension must be a power of two between 2 and 256, got " + std::to_string(dim));
  }
  int n = 0;
  while ((Index{1} << n) < dim) ++n;
  return n;
}

HermitianOperator::HermitianOperator(const CMatrix& entries) {
  if (entries.rows() != entries.cols()) {
    fail(ErrorCode::kDimensionMismatch, "operator must be square");
  }
  n_ = qubits_for_dim(entries.rows());
  check_finite(entries);
  const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol) {
    fail(ErrorCode::kNotHermitian, "operator not Hermitian, ||A - A^dag||_max = " + std::to_string(asym));
  }
  m_ = (entries + entries.adjoint()) * 0.5;
}

HermitianOperator HermitianOperator::identity(int n_qubits) {
  const Index d = Index{1} << n_qubits;
  return HermitianOperator(CMatrix::Identity(d, d), Trusted{});
}

HermitianOperator HermitianOperator::from_pauli(const PauliString& p) {
  if (!p.is_hermitian()) fail(ErrorCode::kNotHermitian, "Pauli " + p.str() + " is not Hermitian");
  return HermitianOperator(p.dense(), Trusted{});
}

DensityMatrix::DensityMatrix(const CMatrix& entries) : HermitianOperator(entries) {
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kHermitianTol) {
    fail(ErrorCode::kNotDensityMatrix, "trace " + std::to_string(tr) + " differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  min_eig_ = es.eigenvalues()(0);
  if (min_eig_ < -kHermitianTol) {
    fail(ErrorCode::kNotDensityMatrix, "negative eigenvalue " + std::to_string(min_eig_));
  }
}

DensityMatrix DensityMatrix::from_ket(const CVector& psi) {
  const double nrm = psi.norm();
  if (!(nrm > 0) || !std::isfinite(nrm)) fail(ErrorCode::kInvalidArgument, "zero or non-finite ket");
  const CVector v = psi / nrm;
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  const Index d = Index{1} << n_qubits;
  return DensityMatrix(CMatrix::Identity(d, d) / static_cast<double>(d));
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

CVector DensityMatrix::dominant_ket() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_);
  CVector v = es.eigenvectors().col(m_.rows() - 1);
  Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  return v * (std::abs(v(k)) / v(k));
}

double schatten_norm_unchecked(const CMatrix& a, Schatten p) {
  check_finite(a);
  if (p == Schatten::kTwo) return a.norm();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a, Eigen::EigenvaluesOnly);
  const RVector ev = es.eigenvalues();
  if (p == Schatten::kOne) return ev.cwiseAbs().sum();
  return ev.cwiseAbs().maxCoeff();
}

double schatten_norm(const HermitianOperator& a, Schatten p) {
  return schatten_norm_unchecked(a.matrix(), p);
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::kDimensionMismatch, "hs_inner dimension mismatch");
  return (a.matrix().adjoint() * b.matrix()).trace().real();
}

double pauli_expectation(const PauliString& p, const DensityMatrix& rho) {
  if (p.num_qubits() != rho.num_qubits()) {
    fail(ErrorCode::kDimensionMismatch, "Pauli and state qubit counts differ");
  }
  const CMatrix& m = rho.matrix();
  const Index d = m.rows();
  Complex acc = 0;
  for (Index b = 0; b < d; ++b) {
    const double s = (popcount(p.z_bits() & static_cast<Mask>(b)) & 1) ? -1.0 : 1.0;
    acc += s * m(b, b ^ p.x_bits());
  }
  return (kIPow[p.phase_exp()] * acc).real();
}

Complex pauli_expectation(const PauliString& p, const CVector& psi) {
  if (psi.size() != (Index{1} << p.num_qubits())) {
    fail(ErrorCode::kDimensionMismatch, "Pauli and state qubit counts differ");
  }
  CVector tmp;
  p.apply(psi, tmp);
  return psi.dot(tmp);
}

std::vector<double> pauli_spectrum(const CMatrix& rho) {
  const int n = qubits_for_dim(rho.rows());
  return spectrum_impl(n, [&](Mask r, Mask c) { return rho(r, c); });
}

std::vector<double> pauli_spectrum(const CVector& psi) {
  const int n = qubits_for_dim(psi.size());
  return spectrum_impl(n, [&](Mask r, Mask c) { return psi(r) * std::conj(psi(c)); });
}

CMatrix from_pauli_spectrum(int n_qubits, const std::vector<double>& coeffs) {
  const Index d = Index{1} << n_qubits;
  if (coeffs.size() != static_cast<std::size_t>(d * d)) {
    fail(ErrorCode::kDimensionMismatch, "Pauli coefficient vector has wrong length");
  }
  CMatrix m = CMatrix::Zero(d, d);
  for (Mask x = 0; x < d; ++x) {
    for (Mask z = 0; z < d; ++z) {
      const double c = coeffs[pauli_index(n_qubits, x, z)];
      if (c == 0.0) continue;
      const int base = popcount(x & z);
      for (Mask b = 0; b < d; ++b) {
        m(b ^ x, b) += c * kIPow[(base + 2 * popcount(z & b)) & 3];
      }
    }
  }
  return m / static_cast<double>(d);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

CVector basis_ket(int n_qubits, Index index) {
  CVector v = CVector::Zero(Index{1} << n_qubits);
  v(index) = 1.0;
  return v;
}

CVector normalized(const CVector& psi) {
  const double nrm = psi.norm();
  if (!(nrm > 0)) fail(ErrorCode::kInvalidArgument, "cannot normalize a zero vector");
  return psi / nrm;
}

CMatrix partial_trace_last(const CMatrix& rho, int n_keep, int n_traced) {
  const Index dk = Index{1} << n_keep;
  const Index dt = Index{1} << n_traced;
  if (rho.rows() != dk * dt) fail(ErrorCode::kDimensionMismatch, "partial trace size mismatch");
  CMatrix out = CMatrix::Zero(dk, dk);
  for (Index i = 0; i < dk; ++i) {
    for (Index j = 0; j < dk; ++j) {
      Complex acc = 0;
      for (Index k = 0; k < dt; ++k) acc += rho(i * dt + k, j * dt + k);
      out(i, j) = acc;
    }
  }
  return out;
}

CMatrix partial_trace_first(const CMatrix& rho, int n_traced, int n_keep) {
  const Index dk = Index{1} << n_keep;
  const Index dt = Index{1} << n_traced;
  if (rho.rows() != dk * dt) fail(ErrorCode::kDimensionMismatch, "partial trace size mismatch");
  CMatrix out = CMatrix::Zero(dk, dk);
  for (Index k = 0; k < dt; ++k) out += rho.block(k * dk, k * dk, dk, dk);
  return out;
}

double ket_overlap(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::kDimensionMismatch, "overlap size mismatch");
  return std::norm(a.dot(b));
}

double pure_trace_distance(const CVector& a, const CVector& b) {
  return std::sqrt(std::max(0.0, 1.0 - ket_overlap(a, b)));
}

}  // namespace magic
