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

#include "magic/reduction.hpp"

#include <cmath>
#include <mutex>
#include <random>

#include <Eigen/Eigenvalues>

#include "magic/error.hpp"
#include "magic/family.hpp"
#include "magic/parallel.hpp"
#include "magic/stabilizer.hpp"

namespace magic {

namespace {

constexpr std::uint64_t kLongScan = 50000000;

CVector ket_with_ones(int n_qubits, std::initializer_list<int> qubits) {
  Mask idx = 0;
  for (int q : qubits) idx |= qubit_bit(n_qubits, q);
  return basis_ket(n_qubits, idx);
}

// (|0> + sign |ones>) for the requested sign.
CVector zero_plus(int n_qubits, std::initializer_list<int> qubits, double sign) {
  CVector v = basis_ket(n_qubits, 0);
  v += sign * ket_with_ones(n_qubits, qubits);
  return v;
}

double min_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

struct ScanOut {
  double min_value = 1e300;
  double max_value = -1e300;
  std::uint64_t argmin = 0;
  std::uint64_t argmax = 0;
  std::uint64_t above = 0;  // values strictly above the threshold
};

ScanOut scan(const CMatrix& m, const StateFamily& fam, const std::vector<std::uint64_t>* indices,
             double threshold, int jobs) {
  const bool real_family = fam.tag() == FamilyTag::kGraph || fam.tag() == FamilyTag::kDoubledGraph;
  const RMatrix mr = m.real();
  const std::uint64_t count = indices ? indices->size() : fam.count();
  ScanOut total;
  std::mutex mu;
  parallel_ranges(count, jobs, [&](std::uint64_t b, std::uint64_t e, int) {
    ScanOut local;
    CVector psi;
    RVector re;
    for (std::uint64_t k = b; k < e; ++k) {
      const std::uint64_t i = indices ? (*indices)[k] : k;
      fam.amplitudes(i, psi);
      double v;
      if (real_family) {
        re = psi.real();
        v = re.dot(mr * re);
      } else {
        v = psi.dot(m * psi).real();
      }
      // Ties go to the smaller family index so results do not depend on chunking.
      if (v < local.min_value || (v == local.min_value && i < local.argmin)) {
        local.min_value = v;
        local.argmin = i;
      }
      if (v > local.max_value || (v == local.max_value && i < local.argmax)) {
        local.max_value = v;
        local.argmax = i;
      }
      if (v > threshold) ++local.above;
    }
    std::lock_guard<std::mutex> lock(mu);
    if (local.min_value < total.min_value ||
        (local.min_value == total.min_value && local.argmin < total.argmin)) {
      total.min_value = local.min_value;
      total.argmin = local.argmin;
    }
    if (local.max_value > total.max_value ||
        (local.max_value == total.max_value && local.argmax < total.argmax)) {
      total.max_value = local.max_value;
      total.argmax = local.argmax;
    }
    total.above += local.above;
  });
  return total;
}

std::vector<std::uint64_t> sample_indices(std::uint64_t count, std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
  std::vector<std::uint64_t> out(n);
  for (auto& i : out) i = pick(rng);
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> assign_edges(int num_vars, int vertices) {
  if (GraphAdjacency::edge_count(vertices) < num_vars) {
    fail(ErrorCode::kCapacityExceeded, std::to_string(vertices) + " vertices carry only " +
                                           std::to_string(GraphAdjacency::edge_count(vertices)) +
                                           " edges for " + std::to_string(num_vars) + " variables");
  }
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < num_vars; ++v) out.push_back(GraphAdjacency::edge_vertices(vertices, v));
  return out;
}

HermitianOperator build_clause_hamiltonian(const SatInstance& instance, int vertices) {
  if (vertices < 2 || 2 * vertices > kMaxQubits) {
    fail(ErrorCode::kSizeCapExceeded, "reduction supports 2..4 vertices (2n <= 8 qubits)");
  }
  const auto edges = assign_edges(instance.num_vars(), vertices);
  const int n = vertices;
  const double d = static_cast<double>(Index{1} << n);
  const Index dd = Index{1} << (2 * n);
  CMatrix h = CMatrix::Zero(dd, dd);
  for (const auto& c : instance.clauses()) {
    // s = 1 for a positive literal, 0 for a negated one.
    auto sign = [](const Literal& l) { return l.negated ? 1.0 : -1.0; };
    const auto& e1 = edges[c[0].var];
    const auto& e2 = edges[c[1].var];
    const auto& e3 = edges[c[2].var];
    const CVector v1 = zero_plus(n, {e1.first, e1.second}, sign(c[0]));
    const CMatrix x = (d / 4.0) * v1 * v1.adjoint();
    const CVector u = zero_plus(n, {e2.first, e2.second}, sign(c[1]));
    const CVector w = zero_plus(n, {e3.first, e3.second}, sign(c[2]));
    const CMatrix y = (d / 4.0) * u * w.adjoint();
    h += kron(x, CMatrix((y + y.adjoint()) * 0.5));
  }
  return HermitianOperator(h);
}

CMatrix graph_block_penalty(int vertices) {
  const int n = vertices;
  const int q = 2 * n;
  const Index dd = Index{1} << q;
  const double pref = static_cast<double>(dd) / 4.0;
  CMatrix p = CMatrix::Zero(dd, dd);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const CVector v = zero_plus(q, {i, n + j}, -1.0);
      p += pref * v * v.adjoint();
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const CVector v = zero_plus(q, {i, j, n + i, n + j}, -1.0);
      p += pref * v * v.adjoint();
    }
  }
  return p;
}

CMatrix phase_penalty(int vertices) {
  const int q = 2 * vertices;
  const Index dd = Index{1} << q;
  const double pref = static_cast<double>(dd) / 4.0;
  CMatrix p = CMatrix::Zero(dd, dd);
  for (int i = 0; i < q; ++i) {
    const CVector v = zero_plus(q, {i}, -1.0);
    p += pref * v * v.adjoint();
  }
  return p;
}

ReductionArtifact start_reduction(const SatInstance& instance, int vertices) {
  ReductionArtifact a;
  a.instance = instance;
  a.vertices = vertices;
  a.h = build_clause_hamiltonian(instance, vertices);
  a.var_to_edge = assign_edges(instance.num_vars(), vertices);
  a.norm_h_inf = schatten_norm(a.h, Schatten::kInf);
  a.stages_built = 0;
  return a;
}

void build_stage_hamiltonians(ReductionArtifact& a) {
  const int q = 2 * a.vertices;
  const Index dd = Index{1} << q;
  const double big_d = static_cast<double>(dd);
  const double c1 = a.norm_h_inf + 1.0;
  const CMatrix p1 = graph_block_penalty(a.vertices);
  const CMatrix p2 = phase_penalty(a.vertices);
  a.checks["penalty1_min_eigenvalue"] = min_eigenvalue(p1);
  a.checks["penalty2_min_eigenvalue"] = min_eigenvalue(p2);
  if (a.checks["penalty1_min_eigenvalue"] < -1e-8 || a.checks["penalty2_min_eigenvalue"] < -1e-8) {
    fail(ErrorCode::kNumericalFailure, "stage penalty operator is not positive semidefinite");
  }
  a.h1 = HermitianOperator(a.h.matrix() + c1 * p1);
  a.h2 = HermitianOperator(a.h1.matrix() + 2.0 * c1 * p2);
  CMatrix zero_proj = CMatrix::Zero(dd, dd);
  zero_proj(0, 0) = 1.0;
  const CMatrix shift3 = big_d * c1 * (zero_proj - CMatrix::Identity(dd, dd) / big_d);
  a.checks["h3_shift_trace"] = shift3.trace().real();
  a.h3 = HermitianOperator(a.h2.matrix() + shift3);
  a.norm_h3_minus_h2_inf = schatten_norm_unchecked(shift3, Schatten::kInf);
  const double c4 = a.norm_h_inf + a.norm_h3_minus_h2_inf + 1.0;
  a.h4 = HermitianOperator(a.h3.matrix() + c4 * (CMatrix::Identity(dd, dd) - big_d * zero_proj));
  a.stages_built = 4;
}

void finalize_wwd(ReductionArtifact& a) {
  if (a.stages_built < 4) fail(ErrorCode::kInvalidArgument, "stage Hamiltonians not built");
  const int n = a.vertices;
  const double d = static_cast<double>(Index{1} << n);
  const double big_d = d * d;
  a.norm_h4_2 = schatten_norm(a.h4, Schatten::kTwo);
  a.w = HermitianOperator(-a.h4.matrix() / a.norm_h4_2);
  a.gamma = -1.0 / (2.0 * a.norm_h4_2);
  a.delta = 1.0 / (4.0 * big_d * a.norm_h4_2);
  a.norm_bound = 16.0 * std::pow(d, 7) * std::pow(static_cast<double>(n), 6);
  a.checks["w_norm_2"] = schatten_norm(a.w, Schatten::kTwo);
  if (a.norm_h4_2 > a.norm_bound + 1e-6) {
    fail(ErrorCode::kNumericalFailure, "norm chain bound violated");
  }
  a.stages_built = 5;
}

ReductionArtifact build_reduction(const SatInstance& instance, int vertices) {
  ReductionArtifact a = start_reduction(instance, vertices);
  build_stage_hamiltonians(a);
  finalize_wwd(a);
  return a;
}

std::uint64_t assignment_from_graph(const ReductionArtifact& a, std::uint64_t edge_bits) {
  std::uint64_t x = 0;
  for (int v = 0; v < a.instance.num_vars(); ++v) {
    const int e = GraphAdjacency::edge_index(a.vertices, a.var_to_edge[v].first, a.var_to_edge[v].second);
    if (!((edge_bits >> e) & 1)) x |= std::uint64_t{1} << v;
  }
  return x;
}

std::uint64_t graph_for_assignment(const ReductionArtifact& a, std::uint64_t assignment) {
  std::uint64_t bits = 0;
  for (int v = 0; v < a.instance.num_vars(); ++v) {
    if (!((assignment >> v) & 1)) {
      bits |= std::uint64_t{1}
              << GraphAdjacency::edge_index(a.vertices, a.var_to_edge[v].first, a.var_to_edge[v].second);
    }
  }
  return bits;
}

bool is_doubled_block(int vertices, std::uint64_t edge_bits_2n) {
  const int n = vertices;
  const GraphAdjacency g(2 * n, edge_bits_2n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.has_edge(i, n + j)) return false;
      if (i < j && g.has_edge(i, j) != g.has_edge(n + i, n + j)) return false;
    }
  }
  return true;
}

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::kTwoCopy: return "H_2COPY";
    case Stage::kH1Graphs: return "H1_GRAPHS";
    case Stage::kH2Coherent: return "H2_COHERENT";
    case Stage::kH3Overlap: return "H3_OVERLAP";
    case Stage::kH4Stab: return "H4_STAB";
  }
  return "UNKNOWN";
}

Stage parse_stage(std::string_view name) {
  for (auto s : {Stage::kTwoCopy, Stage::kH1Graphs, Stage::kH2Coherent, Stage::kH3Overlap, Stage::kH4Stab}) {
    if (stage_name(s) == name) return s;
  }
  fail(ErrorCode::kInvalidArgument, "unknown stage " + std::string(name));
}

VerifyOptions parse_verify_mode(std::string_view mode) {
  VerifyOptions o;
  if (mode == "exhaustive") {
    o.exhaustive = true;
    return o;
  }
  if (mode.rfind("sample:", 0) == 0) {
    const std::string num(mode.substr(7));
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(num, &used);
      if (used != num.size() || v == 0) throw std::invalid_argument(num);
      o.exhaustive = false;
      o.samples = v;
      return o;
    } catch (const std::exception&) {
      fail(ErrorCode::kInvalidArgument, "bad sample count in mode " + std::string(mode));
    }
  }
  fail(ErrorCode::kInvalidArgument, "mode must be exhaustive or sample:N");
}

VerificationReport verify_stage(const ReductionArtifact& a, Stage stage, const VerifyOptions& opts) {
  const int n = a.vertices;
  const int q = 2 * n;
  if (q > 6) fail(ErrorCode::kSizeCapExceeded, "stage verification supports 2n <= 6 qubits");
  if (stage != Stage::kTwoCopy && a.stages_built < 4) {
    fail(ErrorCode::kInvalidArgument, "artifact lacks stage Hamiltonians");
  }
  if (stage == Stage::kH4Stab && a.stages_built < 5) {
    fail(ErrorCode::kInvalidArgument, "artifact lacks the final witness");
  }
  VerificationReport r;
  r.stage = stage;
  r.mode = opts.exhaustive ? "exhaustive" : "sample:" + std::to_string(opts.samples);
  r.seed = opts.seed;
  const auto sat = brute_force_sat(a.instance);
  r.satisfiable = sat.has_value();
  if (sat) {
    r.satisfying_assignment = *sat;
    r.satisfying_graph = graph_for_assignment(a, *sat);
  }
  r.min_value = 1e300;
  r.max_value = -1e300;
  r.exhaustive_coverage = true;
  const double kTol = 1e-9;

  const StateFamily doubled(FamilyTag::kDoubledGraph, n);
  const StateFamily graphs(FamilyTag::kGraph, q);

  // Runs a family (fully or sampled), folds it into the report and returns the scan.
  auto run = [&](const CMatrix& m, const StateFamily& fam, bool full, std::uint64_t samples,
                 std::uint64_t seed, double threshold) {
    std::vector<std::uint64_t> idx;
    if (full) {
      if (fam.count() > kLongScan && !opts.allow_long) {
        fail(ErrorCode::kSizeCapExceeded, std::string(family_name(fam.tag())) + " has " +
                                              std::to_string(fam.count()) +
                                              " members; exhaustive scan needs the long-running flag");
      }
    } else {
      idx = sample_indices(fam.count(), samples, seed);
      r.exhaustive_coverage = false;
    }
    const ScanOut s = scan(m, fam, full ? nullptr : &idx, threshold, opts.jobs);
    StageFamilyStat st;
    st.name = std::string(family_name(fam.tag()));
    st.count = full ? fam.count() : samples;
    st.sampled = !full;
    st.min_value = s.min_value;
    st.max_value = s.max_value;
    st.argmin = st.name + "[" + std::to_string(s.argmin) + "]";
    st.argmax = st.name + "[" + std::to_string(s.argmax) + "]";
    r.families.push_back(st);
    r.scanned += st.count;
    r.min_value = std::min(r.min_value, s.min_value);
    r.max_value = std::max(r.max_value, s.max_value);
    return s;
  };
  auto check_minimum = [&]() {
    if (r.satisfiable) {
      if (std::abs(r.min_value) > kTol) r.failures.push_back("satisfiable instance but minimum is not 0");
    } else if (r.min_value < 1.0 - kTol) {
      r.failures.push_back("unsatisfiable instance but minimum is below 1");
    }
  };

  switch (stage) {
    case Stage::kTwoCopy: {
      run(a.h.matrix(), doubled, true, 0, 0, 1e300);
      const RMatrix hr = a.h.matrix().real();
      CVector psi;
      for (std::uint64_t g = 0; g < doubled.count(); ++g) {
        doubled.amplitudes(g, psi);
        const RVector re = psi.real();
        const double e = re.dot(hr * re);
        if (std::abs(e - clause_energy(a.instance, assignment_from_graph(a, g))) > kTol) ++r.violations;
      }
      if (r.violations > 0) r.failures.push_back("two-copy expectation differs from clause energy");
      check_minimum();
      break;
    }
    case Stage::kH1Graphs: {
      const bool full = opts.exhaustive;
      run(a.h1.matrix(), graphs, full, opts.samples, opts.seed, 1e300);
      run(a.h1.matrix(), doubled, true, 0, 0, 1e300);
      // Penalty vanishes exactly on doubled-block graphs.
      const RMatrix pen = (a.h1.matrix() - a.h.matrix()).real();
      const std::vector<std::uint64_t> idx =
          full ? std::vector<std::uint64_t>{} : sample_indices(graphs.count(), opts.samples, opts.seed);
      const std::uint64_t count = full ? graphs.count() : idx.size();
      std::mutex mu;
      parallel_ranges(count, opts.jobs, [&](std::uint64_t b, std::uint64_t e, int) {
        std::uint64_t bad = 0;
        CVector psi;
        for (std::uint64_t k = b; k < e; ++k) {
          const std::uint64_t g = full ? k : idx[k];
          graphs.amplitudes(g, psi);
          const RVector re = psi.real();
          const double p = re.dot(pen * re);
          const bool zero = std::abs(p) <= kTol;
          if (zero != is_doubled_block(n, g)) ++bad;
        }
        std::lock_guard<std::mutex> lock(mu);
        r.violations += bad;
      });
      if (r.violations > 0) r.failures.push_back("penalty zero set differs from doubled-block graphs");
      check_minimum();
      break;
    }
    case Stage::kH2Coherent: {
      const StateFamily coherent(FamilyTag::kMaxCoherent, q);
      run(a.h2.matrix(), coherent, opts.exhaustive, opts.samples, opts.seed, 1e300);
      run(a.h2.matrix(), graphs, graphs.count() <= kLongScan || opts.allow_long, opts.samples, opts.seed + 1, 1e300);
      run(a.h2.matrix(), doubled, true, 0, 0, 1e300);
      check_minimum();
      break;
    }
    case Stage::kH3Overlap: {
      const StateFamily overlap(FamilyTag::kOverlapT, q);
      run(a.h3.matrix(), overlap, opts.exhaustive, opts.samples, opts.seed, 1e300);
      run(a.h3.matrix(), doubled, true, 0, 0, 1e300);
      check_minimum();
      break;
    }
    case Stage::kH4Stab: {
      r.threshold_yes = a.gamma + a.delta;
      r.threshold_no = a.gamma - a.delta;
      const double thr = r.threshold_no;
      const CMatrix& w = a.w.matrix();
      std::uint64_t above = 0;
      if (opts.exhaustive) {
        if (q > 4 && !opts.allow_long) {
          fail(ErrorCode::kSizeCapExceeded,
               "exhaustive H4 scan on 6 qubits needs the long-running flag; use sample:N");
        }
        const StateFamily all(FamilyTag::kAllStabilizer, q);
        above += run(w, all, true, 0, 0, thr).above;
      } else {
        const StateFamily coherent(FamilyTag::kMaxCoherent, q);
        const StateFamily all(FamilyTag::kAllStabilizer, q);
        above += run(w, doubled, true, 0, 0, thr).above;
        above += run(w, graphs, true, 0, 0, thr).above;
        above += run(w, coherent, false, opts.coherent_samples, opts.seed + 1, thr).above;
        above += run(w, all, false, opts.samples, opts.seed, thr).above;
      }
      if (r.satisfiable) {
        CVector psi;
        doubled.amplitudes(*r.satisfying_graph, psi);
        r.witness_at_satisfying = psi.dot(w * psi).real();
        if (*r.witness_at_satisfying < r.threshold_yes) {
          r.failures.push_back("satisfying doubled graph state does not reach gamma + delta");
        }
      } else {
        r.violations = above;
        if (above > 0) {
          r.failures.push_back(std::to_string(above) + " scanned stabilizer states exceed gamma - delta");
        }
      }
      break;
    }
  }
  r.pass = r.failures.empty();
  return r;
}

}  // namespace magic
