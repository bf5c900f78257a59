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

#include "magic/channel.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "magic/error.hpp"

namespace magic {

QuantumChannel::QuantumChannel(std::vector<CMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) fail(ErrorCode::kInvalidArgument, "channel needs at least one Kraus operator");
  const Index d = kraus_.front().rows();
  n_ = qubits_for_dim(d);
  if (n_ < 1) fail(ErrorCode::kInvalidArgument, "channel must act on at least one qubit");
  CMatrix sum = CMatrix::Zero(d, d);
  for (const auto& k : kraus_) {
    if (k.rows() != d || k.cols() != d) fail(ErrorCode::kDimensionMismatch, "Kraus operators must be d x d");
    if (!k.allFinite()) fail(ErrorCode::kNonFinite, "Kraus operator has non-finite entries");
    sum += k.adjoint() * k;
  }
  const double dev = (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > 1e-9) {
    fail(ErrorCode::kNotTracePreserving, "sum of K^dag K deviates from I by " + std::to_string(dev));
  }
}

QuantumChannel QuantumChannel::unitary(const CMatrix& u) { return QuantumChannel({u}); }

QuantumChannel QuantumChannel::depolarized_unitary(const CMatrix& u, double w) {
  if (!(w >= 0.0 && w <= 1.0)) fail(ErrorCode::kInvalidArgument, "mixing weight must lie in [0, 1]");
  const int n = qubits_for_dim(u.rows());
  const Index d = u.rows();
  std::vector<CMatrix> kraus;
  if (w < 1.0) kraus.push_back(std::sqrt(1.0 - w) * u);
  if (w > 0.0) {
    // Full depolarization: (1/d) sum over all d^2 Paulis P . P.
    const double s = std::sqrt(w) / static_cast<double>(d);
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
      for (Mask z = 0; z < (Mask{1} << n); ++z) kraus.push_back(s * PauliString(n, x, z, 0).dense());
    }
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel QuantumChannel::dephasing(double p) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::kInvalidArgument, "dephasing probability must lie in [0, 1]");
  CMatrix z = CMatrix::Identity(2, 2);
  z(1, 1) = -1.0;
  return QuantumChannel({std::sqrt(1.0 - p) * CMatrix::Identity(2, 2), std::sqrt(p) * z});
}

QuantumChannel QuantumChannel::random(int n_qubits, int num_kraus, std::mt19937_64& rng) {
  if (num_kraus < 1) fail(ErrorCode::kInvalidArgument, "need at least one Kraus operator");
  const Index d = Index{1} << n_qubits;
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix v(d * num_kraus, d);
  for (Index i = 0; i < v.rows(); ++i) {
    for (Index j = 0; j < v.cols(); ++j) v(i, j) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<CMatrix> qr(v);
  const CMatrix q = qr.householderQ() * CMatrix::Identity(v.rows(), d);
  std::vector<CMatrix> kraus;
  for (int k = 0; k < num_kraus; ++k) kraus.push_back(q.middleRows(k * d, d));
  return QuantumChannel(std::move(kraus));
}

CMatrix QuantumChannel::apply(const CMatrix& rho) const {
  const Index d = Index{1} << n_;
  if (rho.rows() % d != 0 || rho.rows() != rho.cols()) {
    fail(ErrorCode::kDimensionMismatch, "state does not contain the channel register");
  }
  const Index rest = rho.rows() / d;
  const CMatrix id = CMatrix::Identity(rest, rest);
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : kraus_) {
    const CMatrix big = kron(k, id);
    out += big * rho * big.adjoint();
  }
  return out;
}

QuantumChannel QuantumChannel::compose(const QuantumChannel& after) const {
  if (after.n_ != n_) fail(ErrorCode::kDimensionMismatch, "channels act on different qubit counts");
  std::vector<CMatrix> kraus;
  for (const auto& b : after.kraus_) {
    for (const auto& a : kraus_) kraus.push_back(b * a);
  }
  return QuantumChannel(std::move(kraus));
}

ChoiState choi_state(const QuantumChannel& channel) {
  const int n = channel.num_qubits();
  if (n > 2) fail(ErrorCode::kSizeCapExceeded, "Choi states are built for channels on at most 2 qubits");
  const Index d = Index{1} << n;
  CVector phi = CVector::Zero(d * d);
  for (Index i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  const CMatrix out = channel.apply(phi * phi.adjoint());
  ChoiState c;
  c.rho = DensityMatrix(CMatrix((out + out.adjoint()) * 0.5));
  const CMatrix marginal = partial_trace_first(c.rho.matrix(), n, n);
  c.marginal_error = (marginal - CMatrix::Identity(d, d) / static_cast<double>(d)).cwiseAbs().maxCoeff();
  if (c.marginal_error > 1e-9) {
    fail(ErrorCode::kNotTracePreserving, "Choi marginal differs from I/d");
  }
  return c;
}

namespace {

void require_single_qubit(const QuantumChannel& channel) {
  if (channel.num_qubits() != 1) {
    fail(ErrorCode::kSizeCapExceeded,
         "channel classification supports single-qubit channels only (Choi state on 2 qubits)");
  }
}

}  // namespace

ChannelVerdict classify_cspc(const QuantumChannel& channel, double eps) {
  require_single_qubit(channel);
  if (!(eps > 0.0)) fail(ErrorCode::kInvalidArgument, "eps must be positive");
  ChannelVerdict v;
  v.choi = choi_state(channel);
  const auto dict = Dictionary::stabilizer(2);
  v.verdict = project_onto_polytope(v.choi.rho, *dict);
  v.verdict.eps = eps;
  v.decision = classify_by_distance(v.verdict.distance, eps);
  v.verdict.decision = v.decision;
  if (v.verdict.distance > kZeroDistance) v.witness = extract_witness(v.choi.rho, v.verdict, *dict);
  return v;
}

ChannelVerdict classify_ctdspc(const QuantumChannel& channel, int t, double net_eps, double eps,
                               const DopedOptions& opts) {
  require_single_qubit(channel);
  ChannelVerdict v;
  v.choi = choi_state(channel);
  DopedOptions o = opts;
  // A pure Choi state generated by a doped seed contributes that seed to the net.
  if (t == 1 && v.choi.rho.is_pure()) {
    if (auto seed = find_doped_seed(v.choi.rho.dominant_ket(), 1)) {
      o.extra_seeds.push_back(*seed);
      v.seed_added = true;
    }
  }
  const DopedDictionary dict = build_doped_dictionary(2, t, net_eps, o);
  const DopedVerdict dv = decide_doped_membership(v.choi.rho, dict, eps);
  v.verdict = dv.verdict;
  v.decision = *dv.verdict.decision;
  v.certified_margin = dv.certified_margin;
  if (v.verdict.distance > kZeroDistance) v.witness = extract_witness(v.choi.rho, v.verdict, *dict.dictionary);
  return v;
}

ThresholdBracket depolarizing_threshold(const CMatrix& u, double width) {
  if (u.rows() != 2) fail(ErrorCode::kSizeCapExceeded, "threshold search supports single-qubit unitaries");
  const auto dict = Dictionary::stabilizer(2);
  auto inside = [&](double w) {
    const ChoiState c = choi_state(QuantumChannel::depolarized_unitary(u, w));
    return project_onto_polytope(c.rho, *dict).distance <= kZeroDistance;
  };
  ThresholdBracket b;
  if (inside(0.0)) {
    b.lo = 0.0;
    b.hi = 0.0;
    return b;
  }
  while (b.hi - b.lo > width) {
    const double mid = 0.5 * (b.lo + b.hi);
    (inside(mid) ? b.hi : b.lo) = mid;
    ++b.steps;
  }
  return b;
}

CMatrix t_gate() {
  CMatrix t = CMatrix::Identity(2, 2);
  t(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
  return t;
}

}  // namespace magic
