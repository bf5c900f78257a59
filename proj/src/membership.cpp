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

#include "magic/membership.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>

#include <Eigen/QR>

#include "magic/error.hpp"
#include "magic/parallel.hpp"

namespace magic {

namespace {

constexpr int kMaxWolfeIterations = 1000000;
constexpr double kWolfeGapTol = 1e-12;

struct MinNormPoint {
  RVector x;
  std::vector<Index> support;
  RVector weights;
  double gap = 0.0;
  int iterations = 0;
};

// Wolfe's active-set algorithm for the minimum-norm point of conv(columns of p).
MinNormPoint min_norm_point(const RMatrix& p) {
  const Index cols = p.cols();
  Index start = 0;
  p.colwise().squaredNorm().minCoeff(&start);
  MinNormPoint r;
  r.support = {start};
  r.weights = RVector::Ones(1);
  r.x = p.col(start);

  auto affine_minimizer = [&](const std::vector<Index>& s) {
    const Index k = static_cast<Index>(s.size());
    RMatrix a(p.rows() + 1, k);
    for (Index i = 0; i < k; ++i) {
      a.col(i).head(p.rows()) = p.col(s[i]);
      a(p.rows(), i) = 1.0;
    }
    RVector rhs = RVector::Zero(p.rows() + 1);
    rhs(p.rows()) = 1.0;
    RVector beta = a.colPivHouseholderQr().solve(rhs);
    return RVector(beta / beta.sum());
  };

  while (true) {
    if (++r.iterations > kMaxWolfeIterations) {
      fail(ErrorCode::kNumericalFailure, "projection did not converge within 10^6 iterations");
    }
    const RVector dots = p.transpose() * r.x;
    Index j = 0;
    const double best = dots.minCoeff(&j);
    r.gap = r.x.squaredNorm() - best;
    if (r.gap <= kWolfeGapTol) break;
    if (std::find(r.support.begin(), r.support.end(), j) != r.support.end()) break;
    if (static_cast<Index>(r.support.size()) > p.rows()) break;
    r.support.push_back(j);
    r.weights.conservativeResize(r.weights.size() + 1);
    r.weights(r.weights.size() - 1) = 0.0;
    while (true) {
      const RVector alpha = affine_minimizer(r.support);
      if (alpha.minCoeff() > 1e-14) {
        r.weights = alpha;
        break;
      }
      double theta = 1.0;
      for (Index i = 0; i < alpha.size(); ++i) {
        if (alpha(i) <= 1e-14) {
          const double denom = r.weights(i) - alpha(i);
          if (denom > 0) theta = std::min(theta, r.weights(i) / denom);
        }
      }
      RVector lam = (1.0 - theta) * r.weights + theta * alpha;
      std::vector<Index> keep_s;
      std::vector<double> keep_w;
      Index drop = 0;
      lam.minCoeff(&drop);
      for (Index i = 0; i < lam.size(); ++i) {
        if (i == drop || lam(i) <= 1e-15) continue;
        keep_s.push_back(r.support[i]);
        keep_w.push_back(lam(i));
      }
      if (keep_s.empty()) {
        keep_s.push_back(r.support[drop]);
        keep_w.push_back(1.0);
      }
      r.support = keep_s;
      r.weights = Eigen::Map<RVector>(keep_w.data(), static_cast<Index>(keep_w.size()));
      r.weights /= r.weights.sum();
      if (r.support.size() == 1) break;
    }
    const double before = r.x.squaredNorm();
    r.x.setZero(p.rows());
    for (std::size_t i = 0; i < r.support.size(); ++i) {
      r.x += r.weights(static_cast<Index>(i)) * p.col(r.support[i]);
    }
    // No strict decrease means rounding has stalled the active set.
    if (r.x.squaredNorm() >= before - 1e-18) break;
  }
  (void)cols;
  r.gap = r.x.squaredNorm() - (p.transpose() * r.x).minCoeff();
  return r;
}

}  // namespace

std::string_view decision_name(Decision d) {
  switch (d) {
    case Decision::kYes: return "YES";
    case Decision::kNo: return "NO";
    case Decision::kPromiseViolated: return "PROMISE_VIOLATED";
  }
  return "UNKNOWN";
}

MembershipVerdict project_onto_polytope(const DensityMatrix& rho, const Dictionary& dict) {
  if (dict.size() == 0) fail(ErrorCode::kEmptyDictionary, "empty dictionary");
  if (dict.num_qubits() != rho.num_qubits()) {
    fail(ErrorCode::kDimensionMismatch, "dictionary and state qubit counts differ");
  }
  const Index d = rho.dim();
  const double sqrt_d = std::sqrt(static_cast<double>(d));
  const auto spec = pauli_spectrum(rho.matrix());
  const RVector r = Eigen::Map<const RVector>(spec.data(), static_cast<Index>(spec.size())).tail(d * d - 1);
  const RMatrix& coords = dict.pauli_coordinates();
  RMatrix p = coords.bottomRows(d * d - 1);
  p.colwise() -= r;
  p /= sqrt_d;

  const MinNormPoint mnp = min_norm_point(p);
  MembershipVerdict v;
  CMatrix tau = CMatrix::Zero(d, d);
  for (std::size_t i = 0; i < mnp.support.size(); ++i) {
    const double w = mnp.weights(static_cast<Index>(i));
    const CVector& s = dict.state(static_cast<std::size_t>(mnp.support[i]));
    tau += w * (s * s.adjoint());
    v.weights.emplace_back(static_cast<std::size_t>(mnp.support[i]), w);
  }
  std::sort(v.weights.begin(), v.weights.end());
  tau /= tau.trace().real();
  v.projection = DensityMatrix((tau + tau.adjoint()) * 0.5);
  v.distance = (rho.matrix() - v.projection.matrix()).norm();
  v.optimality_gap = std::max(0.0, mnp.gap);
  v.iterations = mnp.iterations;
  v.dictionary_tag = dict.tag();
  return v;
}

Decision classify_by_distance(double distance, double eps) {
  if (distance <= kZeroDistance) return Decision::kYes;
  if (distance > eps) return Decision::kNo;
  return Decision::kPromiseViolated;
}

MembershipVerdict decide_wmem(const DensityMatrix& rho, double eps, const Dictionary& dict) {
  if (!(eps > 0)) fail(ErrorCode::kInvalidArgument, "eps must be positive");
  MembershipVerdict v = project_onto_polytope(rho, dict);
  v.eps = eps;
  if (v.distance > eps) {
    v.decision = Decision::kNo;
  } else if (v.distance <= kZeroDistance) {
    const InteriorMargin m = interior_margin(rho, dict);
    v.interior_margin = m.value;
    v.interior_margin_exact = m.exact;
    v.decision = m.value >= eps ? Decision::kYes : Decision::kPromiseViolated;
  } else {
    v.decision = Decision::kPromiseViolated;
  }
  return v;
}

MembershipVerdict decide_wmem(const DensityMatrix& rho, double eps) {
  if (rho.num_qubits() > 3) fail(ErrorCode::kSizeCapExceeded, "membership supports n <= 3");
  return decide_wmem(rho, eps, *Dictionary::stabilizer(rho.num_qubits()));
}

WitnessReport extract_witness(const DensityMatrix& rho, const MembershipVerdict& verdict,
                              const Dictionary& dict) {
  if (verdict.distance <= kZeroDistance) {
    fail(ErrorCode::kInteriorPoint, "state lies in the hull; no separating witness exists");
  }
  WitnessReport r;
  const CMatrix w = rho.matrix() - verdict.projection.matrix();
  r.witness = HermitianOperator((w + w.adjoint()) * 0.5);
  r.gamma = dict.expectations(r.witness.matrix()).maxCoeff();
  r.value_on_rho = (r.witness.matrix() * rho.matrix()).trace().real();
  r.margin = r.value_on_rho - r.gamma;
  return r;
}

FamilyScan scan_family(const CMatrix& w, const StateFamily& family, int jobs) {
  if (w.rows() != (Index{1} << family.num_qubits())) {
    fail(ErrorCode::kDimensionMismatch, "operator and family sizes differ");
  }
  const bool real_family = family.tag() == FamilyTag::kGraph || family.tag() == FamilyTag::kDoubledGraph;
  const RMatrix wr = w.real();
  FamilyScan total;
  std::mutex mu;
  parallel_ranges(family.count(), jobs, [&](std::uint64_t begin, std::uint64_t end, int) {
    FamilyScan local;
    CVector psi;
    RVector re;
    for (std::uint64_t i = begin; i < end; ++i) {
      family.amplitudes(i, psi);
      double v;
      if (real_family) {
        re = psi.real();
        v = re.dot(wr * re);
      } else {
        v = psi.dot(w * psi).real();
      }
      if (v > local.max_value) {
        local.max_value = v;
        local.argmax = i;
      }
      if (v < local.min_value) {
        local.min_value = v;
        local.argmin = i;
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    if (local.max_value > total.max_value ||
        (local.max_value == total.max_value && local.argmax < total.argmax)) {
      total.max_value = local.max_value;
      total.argmax = local.argmax;
    }
    if (local.min_value < total.min_value ||
        (local.min_value == total.min_value && local.argmin < total.argmin)) {
      total.min_value = local.min_value;
      total.argmin = local.argmin;
    }
  });
  return total;
}

WwdResult check_wwd_instance(const HermitianOperator& w, double gamma, double delta, const WwdScan& scan) {
  const double nrm = w.matrix().norm();
  if (nrm > 1.0 + 1e-9) {
    fail(ErrorCode::kNormPrecondition, "witness Frobenius norm " + std::to_string(nrm) + " exceeds 1");
  }
  if (!(delta > 0)) fail(ErrorCode::kInvalidArgument, "delta must be positive");
  const int n = w.num_qubits();
  WwdResult res;
  res.max_value = -1e300;
  res.min_value = 1e300;
  auto consider = [&](double v, const std::string& label, const CVector& psi) {
    if (v > res.max_value) {
      res.max_value = v;
      res.argmax_label = label;
      res.argmax = psi;
    }
    res.min_value = std::min(res.min_value, v);
  };
  for (const auto& fam : scan.families) {
    if (fam.num_qubits() != n) fail(ErrorCode::kDimensionMismatch, "family qubit count mismatch");
    const FamilyScan fs = scan_family(w.matrix(), fam, scan.jobs);
    CVector psi;
    fam.amplitudes(fs.argmax, psi);
    consider(fs.max_value, std::string(family_name(fam.tag())) + "[" + std::to_string(fs.argmax) + "]", psi);
    res.min_value = std::min(res.min_value, fs.min_value);
    res.families.push_back({std::string(family_name(fam.tag())), fam.count(), fs.max_value, fs.min_value});
    res.scanned += fam.count();
    if (fam.tag() == FamilyTag::kAllStabilizer) res.exhaustive = true;
  }
  if (scan.samples > 0) {
    const StateFamily all(FamilyTag::kAllStabilizer, n);
    std::mt19937_64 rng(scan.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, all.count() - 1);
    std::vector<std::uint64_t> idx(scan.samples);
    for (auto& i : idx) i = pick(rng);
    double smax = -1e300;
    double smin = 1e300;
    std::uint64_t arg = 0;
    std::mutex mu;
    parallel_ranges(scan.samples, scan.jobs, [&](std::uint64_t b, std::uint64_t e, int) {
      CVector psi;
      double lmax = -1e300;
      double lmin = 1e300;
      std::uint64_t larg = 0;
      for (std::uint64_t k = b; k < e; ++k) {
        all.amplitudes(idx[k], psi);
        const double v = psi.dot(w.matrix() * psi).real();
        if (v > lmax) {
          lmax = v;
          larg = idx[k];
        }
        lmin = std::min(lmin, v);
      }
      std::lock_guard<std::mutex> lock(mu);
      if (lmax > smax) {
        smax = lmax;
        arg = larg;
      }
      smin = std::min(smin, lmin);
    });
    CVector psi;
    all.amplitudes(arg, psi);
    consider(smax, "SAMPLE[" + std::to_string(arg) + "]", psi);
    res.min_value = std::min(res.min_value, smin);
    res.families.push_back({"SAMPLE", scan.samples, smax, smin});
    res.scanned += scan.samples;
  }
  for (std::size_t i = 0; i < scan.extra_states.size(); ++i) {
    const CVector psi = normalized(scan.extra_states[i]);
    if (psi.size() != w.dim()) fail(ErrorCode::kDimensionMismatch, "extra state size mismatch");
    const double v = psi.dot(w.matrix() * psi).real();
    const std::string label = i < scan.extra_labels.size() ? scan.extra_labels[i] : "EXTRA[" + std::to_string(i) + "]";
    consider(v, label, psi);
    ++res.scanned;
  }
  if (!scan.extra_states.empty()) {
    res.families.push_back({"EXTRA", scan.extra_states.size(), res.max_value, res.min_value});
  }
  if (scan.extra_complete) res.exhaustive = true;
  if (res.scanned == 0) fail(ErrorCode::kEmptyDictionary, "nothing to scan");
  if (res.max_value >= gamma + delta) {
    res.decision = Decision::kYes;
  } else if (res.max_value <= gamma - delta) {
    res.decision = Decision::kNo;
  } else {
    res.decision = Decision::kPromiseViolated;
  }
  return res;
}

}  // namespace magic
