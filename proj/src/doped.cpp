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

#include "magic/doped.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>

#include "magic/clifford.hpp"
#include "magic/error.hpp"
#include "magic/parallel.hpp"

namespace magic {

namespace {

using Vec3 = Eigen::Vector3d;

Vec3 bloch_vector(const CVector& psi) {
  const Complex a = psi(0);
  const Complex b = psi(1);
  const Complex ab = std::conj(a) * b;
  return Vec3(2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b));
}

CVector bloch_state(const Vec3& v) {
  const Vec3 u = v.normalized();
  const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
  const double phi = std::atan2(u.y(), u.x());
  CVector psi(2);
  psi(0) = std::cos(theta / 2.0);
  psi(1) = std::polar(std::sin(theta / 2.0), phi);
  return psi;
}

// Trace distance between pure qubit states with Bloch vectors a and b.
double bloch_distance(const Vec3& a, const Vec3& b) {
  return std::sqrt(std::max(0.0, (1.0 - a.dot(b)) / 2.0));
}

double nearest(const Vec3& p, const std::vector<Vec3>& pts) {
  double best = 1e300;
  for (const auto& q : pts) best = std::min(best, bloch_distance(p, q));
  return best;
}

// Branch and bound over cube-face cells for max_v min_i angle(v, p_i).
// Stops once the best upper bound is within tol of a realised value, or,
// when stop_above >= 0, as soon as a point beyond stop_above is found or
// every cell is certified at or below it. Returns a certified upper bound.
struct FarthestResult {
  double upper = 0.0;  // certified, as an angle
  double lower = -1.0;  // realised at `where`, as an angle
  Vec3 where = Vec3::UnitZ();
};

double angle_to_nearest(const Vec3& p, const std::vector<Vec3>& pts) {
  double best = -2.0;
  for (const auto& q : pts) best = std::max(best, p.dot(q));
  return std::acos(std::clamp(best, -1.0, 1.0));
}

FarthestResult farthest_point(const std::vector<Vec3>& pts, double stop_above, double tol) {
  struct Cell {
    int face;
    double u, v, h;  // centre and half width in face coordinates
    double value;  // angle at the centre
    double upper;
    bool operator<(const Cell& o) const { return upper < o.upper; }
  };
  static const Vec3 normal[6] = {Vec3::UnitX(), -Vec3::UnitX(), Vec3::UnitY(), -Vec3::UnitY(), Vec3::UnitZ(), -Vec3::UnitZ()};
  static const Vec3 e1[6] = {Vec3::UnitY(), Vec3::UnitZ(), Vec3::UnitZ(), Vec3::UnitX(), Vec3::UnitX(), Vec3::UnitY()};
  static const Vec3 e2[6] = {Vec3::UnitZ(), Vec3::UnitY(), Vec3::UnitX(), Vec3::UnitZ(), Vec3::UnitY(), Vec3::UnitX()};
  auto point = [&](int f, double u, double v) { return (normal[f] + u * e1[f] + v * e2[f]).normalized(); };
  FarthestResult res;
  auto make = [&](int f, double u, double v, double h) {
    Cell c{f, u, v, h, 0.0, 0.0};
    const Vec3 p = point(f, u, v);
    c.value = pts.empty() ? std::numbers::pi : angle_to_nearest(p, pts);
    double radius = 0.0;
    for (int su = -1; su <= 1; su += 2) {
      for (int sv = -1; sv <= 1; sv += 2) {
        radius = std::max(radius, std::acos(std::clamp(p.dot(point(f, u + su * h, v + sv * h)), -1.0, 1.0)));
      }
    }
    c.upper = c.value + radius;
    if (c.value > res.lower) {
      res.lower = c.value;
      res.where = p;
    }
    return c;
  };
  std::priority_queue<Cell> heap;
  for (int f = 0; f < 6; ++f) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) heap.push(make(f, -0.75 + 0.5 * a, -0.75 + 0.5 * b, 0.25));
    }
  }
  while (!heap.empty()) {
    const Cell c = heap.top();
    if (stop_above >= 0.0 && res.lower > stop_above) break;
    if (c.upper <= res.lower + tol || (stop_above >= 0.0 && c.upper <= stop_above)) break;
    if (c.h < 1e-9) break;
    heap.pop();
    const double h = c.h / 2.0;
    for (int su = -1; su <= 1; su += 2) {
      for (int sv = -1; sv <= 1; sv += 2) heap.push(make(c.face, c.u + su * h, c.v + sv * h, h));
    }
  }
  res.upper = heap.empty() ? res.lower : std::max(res.lower, heap.top().upper);
  return res;
}

double angle_of(double trace_distance) { return 2.0 * std::asin(std::clamp(trace_distance, 0.0, 1.0)); }
double trace_of(double angle) { return std::sin(std::clamp(angle, 0.0, std::numbers::pi) / 2.0); }

CVector canonical_phase(const CVector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-9) return v * (std::abs(v(i)) / v(i));
  }
  return v;
}

std::vector<long long> rounded_key(const CVector& v) {
  std::vector<long long> key;
  key.reserve(2 * v.size());
  for (Index i = 0; i < v.size(); ++i) {
    key.push_back(std::llround(v(i).real() * 1e7));
    key.push_back(std::llround(v(i).imag() * 1e7));
  }
  return key;
}

CVector t_state() {
  CVector psi(2);
  psi(0) = 1.0 / std::sqrt(2.0);
  psi(1) = std::polar(1.0 / std::sqrt(2.0), std::numbers::pi / 4.0);
  return psi;
}

std::string cache_path(int n, int t, double eps, std::uint64_t extras) {
  const char* dir = std::getenv("MAGIC_CACHE_DIR");
  if (!dir || !*dir) return {};
  char name[160];
  std::snprintf(name, sizeof name, "doped-n%d-t%d-eps%.12g-%s-%016llx.bin", n, t, eps, kNetVersion,
                static_cast<unsigned long long>(extras));
  return (std::filesystem::path(dir) / name).string();
}

void write_kets(std::ofstream& f, const std::vector<CVector>& kets) {
  const std::uint64_t count = kets.size();
  f.write(reinterpret_cast<const char*>(&count), sizeof count);
  for (const auto& k : kets) {
    const std::uint64_t len = k.size();
    f.write(reinterpret_cast<const char*>(&len), sizeof len);
    f.write(reinterpret_cast<const char*>(k.data()), static_cast<std::streamsize>(len * sizeof(Complex)));
  }
}

bool read_kets(std::ifstream& f, std::vector<CVector>& kets) {
  std::uint64_t count = 0;
  if (!f.read(reinterpret_cast<char*>(&count), sizeof count) || count > (1u << 26)) return false;
  kets.resize(count);
  for (auto& k : kets) {
    std::uint64_t len = 0;
    if (!f.read(reinterpret_cast<char*>(&len), sizeof len) || len > 256) return false;
    k.resize(static_cast<Index>(len));
    if (!f.read(reinterpret_cast<char*>(k.data()), static_cast<std::streamsize>(len * sizeof(Complex)))) return false;
  }
  return true;
}

constexpr char kCacheMagic[8] = {'M', 'G', 'D', 'O', 'P', 'E', 'D', '2'};

bool load_cache(const std::string& path, DopedDictionary& d) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  char magic[8];
  if (!f.read(magic, 8) || !std::equal(magic, magic + 8, kCacheMagic)) return false;
  double head[3];
  std::uint64_t orbit = 0;
  if (!f.read(reinterpret_cast<char*>(head), sizeof head)) return false;
  if (!f.read(reinterpret_cast<char*>(&orbit), sizeof orbit)) return false;
  std::vector<CVector> members;
  if (!read_kets(f, d.seeds) || !read_kets(f, members)) return false;
  d.covering_radius = head[0];
  d.min_seed_separation = head[1];
  d.packing_ok = head[2] != 0.0;
  d.orbit_size_before_dedup = orbit;
  char tag[96];
  std::snprintf(tag, sizeof tag, "DOPED(n=%d,t=%d,eps=%g)", d.n_qubits, d.t, d.net_eps);
  d.dictionary = std::make_shared<Dictionary>(d.n_qubits, std::move(members), tag);
  return true;
}

// Stores the members as built, before the dictionary normalizes them, so a
// reload reproduces the same floating-point values.
void store_cache(const std::string& path, const DopedDictionary& d, const std::vector<CVector>& members) {
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) return;
    f.write(kCacheMagic, 8);
    const double head[3] = {d.covering_radius, d.min_seed_separation, d.packing_ok ? 1.0 : 0.0};
    f.write(reinterpret_cast<const char*>(head), sizeof head);
    const std::uint64_t orbit = d.orbit_size_before_dedup;
    f.write(reinterpret_cast<const char*>(&orbit), sizeof orbit);
    write_kets(f, d.seeds);
    write_kets(f, members);
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

double DopedDictionary::log2_cardinality_bound() const {
  const double n = n_qubits;
  return 2.0 * n * n + 3.0 * n + std::ldexp(1.0, 2 * t) * std::log2(3.0 / net_eps);
}

bool DopedDictionary::within_cardinality_bound() const {
  return std::log2(static_cast<double>(std::max<std::size_t>(size(), 1))) <= log2_cardinality_bound();
}

double DopedDictionary::net_coarseness() const { return std::sqrt(2.0) * covering_radius; }

double bloch_covering_radius(const std::vector<CVector>& seeds) {
  if (seeds.empty()) return 1.0;
  std::vector<Vec3> pts;
  for (const auto& s : seeds) pts.push_back(bloch_vector(normalized(s)));
  return trace_of(farthest_point(pts, -1.0, 1e-7).upper);
}

std::vector<CVector> bloch_net(double net_eps, const std::vector<CVector>& fixed, double* covering_radius) {
  if (!(net_eps > 0.0) || net_eps >= 1.0) fail(ErrorCode::kInvalidArgument, "net_eps must lie in (0, 1)");
  std::vector<Vec3> pts;
  for (const auto& s : fixed) pts.push_back(bloch_vector(normalized(s)));
  // Greedy pass over a Fibonacci sphere.
  const double theta = 2.0 * std::asin(net_eps);
  const int count = std::max(64, static_cast<int>(std::ceil(40.0 / (theta * theta))));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    const double z = 1.0 - 2.0 * (k + 0.5) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vec3 p(r * std::cos(golden * k), r * std::sin(golden * k), z);
    if (nearest(p, pts) > net_eps) pts.push_back(p);
  }
  // Fill the largest holes until the packing also covers at radius net_eps.
  const double target = angle_of(net_eps);
  for (;;) {
    const FarthestResult far = farthest_point(pts, target, 1e-7);
    if (far.lower > target) {
      pts.push_back(far.where);
      continue;
    }
    if (far.upper > target) fail(ErrorCode::kNumericalFailure, "net covering search did not resolve");
    break;
  }
  if (covering_radius) *covering_radius = trace_of(farthest_point(pts, -1.0, 1e-7).upper);
  std::vector<CVector> out;
  for (std::size_t i = 0; i < fixed.size(); ++i) out.push_back(normalized(fixed[i]));
  for (std::size_t i = fixed.size(); i < pts.size(); ++i) out.push_back(bloch_state(pts[i]));
  return out;
}

DopedDictionary build_doped_dictionary(int n_qubits, int t, double net_eps, const DopedOptions& opts) {
  if (n_qubits < 1 || n_qubits > 2) fail(ErrorCode::kSizeCapExceeded, "doped dictionaries support 1 or 2 qubits");
  if (t < 0 || t > 1) fail(ErrorCode::kSizeCapExceeded, "doping level must be 0 or 1");
  if (!(net_eps > 0.0) || !std::isfinite(net_eps)) fail(ErrorCode::kInvalidArgument, "net_eps must be positive");
  DopedDictionary d;
  d.n_qubits = n_qubits;
  d.t = t;
  d.net_eps = net_eps;

  std::vector<CVector> fixed;
  if (t == 1) {
    fixed.push_back(basis_ket(1, 0));
    if (opts.include_t_state) fixed.push_back(t_state());
    for (const auto& e : opts.extra_seeds) {
      if (e.size() != 2) fail(ErrorCode::kDimensionMismatch, "extra seeds must be single-qubit kets");
      fixed.push_back(normalized(e));
    }
  }
  std::uint64_t extras = fnv1a64(opts.include_t_state ? "T" : "-");
  for (const auto& e : opts.extra_seeds) {
    const CVector c = canonical_phase(normalized(e));
    for (auto k : rounded_key(c)) extras = fnv1a64(std::to_string(k) + ",", extras);
  }
  const std::string path = opts.use_cache ? cache_path(n_qubits, t, net_eps, extras) : std::string();
  if (!path.empty() && load_cache(path, d)) return d;

  if (t == 0) {
    d.seeds.push_back(CVector::Ones(1));
    d.covering_radius = 0.0;
  } else {
    if (net_eps >= 1.0) fail(ErrorCode::kInvalidArgument, "net_eps must be below 1 for t = 1");
    d.seeds = bloch_net(net_eps, fixed, &d.covering_radius);
    std::vector<Vec3> pts;
    for (const auto& s : d.seeds) pts.push_back(bloch_vector(s));
    double sep = 1e300;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) sep = std::min(sep, bloch_distance(pts[i], pts[j]));
    }
    d.min_seed_separation = pts.size() > 1 ? sep : 0.0;
    d.packing_ok = pts.size() < 2 || sep > net_eps;
  }

  // Clifford orbit of seed (x) |0...0>, deduplicated up to global phase.
  const auto& group = CliffordGroup::get(n_qubits);
  const CVector pad = basis_ket(n_qubits - t, 0);
  std::vector<CVector> padded;
  for (const auto& s : d.seeds) padded.push_back(n_qubits - t > 0 ? kron(s, pad) : s);
  const std::size_t total = padded.size() * group.size();
  std::map<std::vector<long long>, bool> seen;
  std::vector<CVector> members;
  std::vector<CVector> images(group.size());
  for (const auto& seed : padded) {
    parallel_ranges(group.size(), opts.jobs, [&](std::uint64_t b, std::uint64_t e, int) {
      for (std::uint64_t k = b; k < e; ++k) images[k] = canonical_phase(group.element(k) * seed);
    });
    for (auto& v : images) {
      if (seen.emplace(rounded_key(v), true).second) members.push_back(v);
    }
  }
  d.orbit_size_before_dedup = total;
  char tag[96];
  std::snprintf(tag, sizeof tag, "DOPED(n=%d,t=%d,eps=%g)", n_qubits, t, net_eps);
  if (!path.empty()) {
    d.dictionary = std::make_shared<Dictionary>(n_qubits, members, tag);
    store_cache(path, d, members);
  } else {
    d.dictionary = std::make_shared<Dictionary>(n_qubits, std::move(members), tag);
  }
  return d;
}

DopedVerdict decide_doped_membership(const DensityMatrix& rho, const DopedDictionary& dict, double eps) {
  if (!dict.dictionary) fail(ErrorCode::kEmptyDictionary, "doped dictionary is empty");
  if (rho.num_qubits() != dict.n_qubits) {
    fail(ErrorCode::kDimensionMismatch, "state and doped dictionary qubit counts differ");
  }
  if (!(eps > 0.0)) fail(ErrorCode::kInvalidArgument, "eps must be positive");
  DopedVerdict out;
  out.verdict = project_onto_polytope(rho, *dict.dictionary);
  out.verdict.eps = eps;
  out.verdict.decision = classify_by_distance(out.verdict.distance, eps);
  out.net_coarseness = dict.net_coarseness();
  out.certified_margin = out.verdict.distance - out.net_coarseness;
  return out;
}

RobustnessCertificate t_extended_robustness(const DensityMatrix& rho, int t, double net_eps,
                                            const DopedOptions& opts) {
  const DopedDictionary d = build_doped_dictionary(rho.num_qubits(), t, net_eps, opts);
  return robustness_over(rho, *d.dictionary);
}

std::optional<CVector> find_doped_seed(const CVector& psi_in, int t) {
  const int n = qubits_for_dim(psi_in.size());
  if (n > 2) fail(ErrorCode::kSizeCapExceeded, "seed search supports at most 2 qubits");
  if (t < 0 || t > 1) fail(ErrorCode::kSizeCapExceeded, "doping level must be 0 or 1");
  const CVector psi = normalized(psi_in);
  if (t >= n) return psi;
  const Index block = Index{1} << (n - t);
  for (const auto& c : CliffordGroup::get(n).elements()) {
    const CVector v = c.adjoint() * psi;
    bool ok = true;
    for (Index i = 0; i < v.size() && ok; ++i) {
      if (i % block != 0 && std::abs(v(i)) > 1e-9) ok = false;
    }
    if (!ok) continue;
    CVector chi(Index{1} << t);
    for (Index k = 0; k < chi.size(); ++k) chi(k) = v(k * block);
    return chi;
  }
  return std::nullopt;
}

ClosureReport check_doped_closure(const CVector& psi_in, const CVector& phi_in, int t, double net_eps) {
  const int total = qubits_for_dim(psi_in.size());
  const int m = qubits_for_dim(phi_in.size());
  const int n = total - m;
  if (n < 1 || n > 2) fail(ErrorCode::kSizeCapExceeded, "closure check keeps 1 or 2 qubits");
  if (t > n) fail(ErrorCode::kInvalidArgument, "doping level exceeds the kept register");
  const CVector psi = normalized(psi_in);
  const CVector phi = normalized(phi_in);
  const Index dn = Index{1} << n;
  const Index dm = Index{1} << m;
  // Row index is the kept register.
  CMatrix mat(dn, dm);
  for (Index r = 0; r < dn; ++r) {
    for (Index c = 0; c < dm; ++c) mat(r, c) = psi(r * dm + c);
  }

  ClosureReport rep;
  rep.t = t;
  std::vector<CVector> seeds;
  auto add_seed = [&](const CVector& v) {
    if (auto s = find_doped_seed(v, t)) {
      if (t == 1) seeds.push_back(*s);
      return true;
    }
    return false;
  };

  const CVector proj = mat * phi.conjugate();
  rep.projection_norm = proj.norm();
  rep.projection_zero = rep.projection_norm < 1e-9;
  bool seeds_found = true;
  if (!rep.projection_zero) seeds_found = add_seed(proj / rep.projection_norm) && seeds_found;
  std::vector<CVector> pieces;
  for (Index k = 0; k < dm; ++k) {
    const CVector col = mat.col(k);
    if (col.norm() > 1e-9) {
      pieces.push_back(col);
      seeds_found = add_seed(col / col.norm()) && seeds_found;
    }
  }
  DopedOptions opts;
  opts.extra_seeds = seeds;
  opts.use_cache = false;
  const DopedDictionary dict = build_doped_dictionary(n, t, net_eps, opts);
  if (!rep.projection_zero) {
    const auto v = project_onto_polytope(DensityMatrix::from_ket(proj / rep.projection_norm), *dict.dictionary);
    rep.projected_distance = v.distance;
    rep.projected_ok = v.distance <= 1e-6;
  } else {
    rep.projected_ok = true;
  }
  const CMatrix reduced = mat * mat.adjoint();
  rep.reduced_distance = project_onto_polytope(DensityMatrix(reduced), *dict.dictionary).distance;
  rep.reduced_ok = rep.reduced_distance <= 1e-6;
  rep.pass = seeds_found && rep.projected_ok && rep.reduced_ok;
  return rep;
}

CVector haar_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(Index{1} << n_qubits);
  for (Index i = 0; i < v.size(); ++i) v(i) = Complex(g(rng), g(rng));
  return v.normalized();
}

}  // namespace magic
