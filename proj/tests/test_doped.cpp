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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <random>

#include "magic/clifford.hpp"
#include "magic/doped.hpp"
#include "magic/error.hpp"
#include "magic/monotones.hpp"
#include "magic/operator.hpp"
#include "magic/stabilizer.hpp"

using namespace magic;

namespace {

CVector t_ket() {
  CVector psi(2);
  psi << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), std::numbers::pi / 4.0);
  return psi;
}

DopedOptions no_cache() {
  DopedOptions o;
  o.use_cache = false;
  return o;
}

}  // namespace

TEST_CASE("t = 0 reproduces the stabilizer dictionary") {
  const auto d1 = build_doped_dictionary(1, 0, 0.5, no_cache());
  CHECK(d1.size() == 6);
  const auto d2 = build_doped_dictionary(2, 0, 0.5, no_cache());
  CHECK(d2.size() == 60);
  CHECK(d2.within_cardinality_bound());
}

TEST_CASE("single-qubit net covers the sphere and keeps forced seeds") {
  double r = 0.0;
  const auto net = bloch_net(0.5, {basis_ket(1, 0), t_ket()}, &r);
  REQUIRE(net.size() >= 2);
  CHECK((net[0] - basis_ket(1, 0)).norm() < 1e-12);
  CHECK((net[1] - t_ket()).norm() < 1e-12);
  CHECK(r <= 0.5);
  CHECK(bloch_covering_radius(net) <= r + 1e-9);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 500; ++k) {
    const CVector psi = haar_state(1, rng);
    double best = 1.0;
    for (const auto& s : net) best = std::min(best, std::sqrt(std::max(0.0, 1.0 - std::norm(s.dot(psi)))));
    CHECK(best <= r + 1e-9);
  }
}

TEST_CASE("doped membership") {
  const auto d = build_doped_dictionary(1, 1, 0.5, no_cache());
  CHECK(d.packing_ok);
  CHECK(d.within_cardinality_bound());
  const auto yes = decide_doped_membership(DensityMatrix::from_ket(t_ket()), d, 0.05);
  CHECK(yes.verdict.distance <= kZeroDistance);
  CHECK(yes.verdict.decision == Decision::kYes);

  const auto d2 = build_doped_dictionary(2, 1, 0.5, no_cache());
  const auto t0 = decide_doped_membership(DensityMatrix::from_ket(kron(t_ket(), basis_ket(1, 0))), d2, 0.05);
  CHECK(t0.verdict.decision == Decision::kYes);
  // Every t = 0 member is also a t = 1 member.
  const auto d0 = build_doped_dictionary(2, 0, 0.5, no_cache());
  for (const auto& s : d0.dictionary->states()) {
    CHECK(project_onto_polytope(DensityMatrix::from_ket(s), *d2.dictionary).distance <= 1e-8);
  }
}

TEST_CASE("extended robustness") {
  const DensityMatrix t = DensityMatrix::from_ket(t_ket());
  const auto r0 = t_extended_robustness(t, 0, 0.5, no_cache());
  CHECK(r0.value == doctest::Approx(robustness_of_magic(t).value).epsilon(1e-6));
  CHECK(t_extended_robustness(t, 1, 0.5, no_cache()).value == doctest::Approx(1.0).epsilon(1e-6));
  const DensityMatrix tt = DensityMatrix::from_ket(kron(t_ket(), t_ket()));
  double prev = 1e9;
  for (double e : {0.5, 0.3, 0.2}) {
    const double v = t_extended_robustness(tt, 1, e, no_cache()).value;
    CHECK(v > 1.0 + 1e-6);
    CHECK(v <= prev + 1e-7);
    prev = v;
  }
}

TEST_CASE("doped seed search") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 10; ++k) {
    const CMatrix c = random_clifford(2, rng);
    const CVector psi = c * kron(t_ket(), basis_ket(1, 0));
    CHECK(find_doped_seed(psi, 1).has_value());
  }
  CHECK_FALSE(find_doped_seed(kron(t_ket(), t_ket()), 1).has_value());
  CHECK(find_doped_seed(basis_ket(2, 3), 0).has_value());
}

TEST_CASE("closure under stabilizer projection and partial trace") {
  CVector bell = CVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const CVector psi = kron(t_ket(), bell);
  const auto rep = check_doped_closure(psi, basis_ket(1, 0), 1, 0.5);
  CHECK(rep.pass);

  std::mt19937_64 rng(23);
  const auto& phis = enumerate_stabilizer_states(1);
  for (int k = 0; k < 20; ++k) {
    const CMatrix c = random_clifford(3, rng);
    const CVector v = c * kron(t_ket(), basis_ket(2, 0));
    const CVector phi = phis[rng() % phis.size()].amplitudes();
    const auto r = check_doped_closure(v, phi, 1, 0.5);
    CHECK(r.pass);
  }
}

TEST_CASE("cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "magic-doped-cache-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv("MAGIC_CACHE_DIR", dir.c_str(), 1);
  const auto a = build_doped_dictionary(1, 1, 0.4);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
  const auto b = build_doped_dictionary(1, 1, 0.4);
  ::unsetenv("MAGIC_CACHE_DIR");
  REQUIRE(a.size() == b.size());
  CHECK(a.covering_radius == b.covering_radius);
  for (std::size_t j = 0; j < a.size(); ++j) {
    CHECK((a.dictionary->state(j) - b.dictionary->state(j)).norm() == 0.0);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(build_doped_dictionary(3, 1, 0.5, no_cache()), MagicError);
  CHECK_THROWS_AS(build_doped_dictionary(1, 2, 0.5, no_cache()), MagicError);
  CHECK_THROWS_AS(build_doped_dictionary(1, 1, 0.0, no_cache()), MagicError);
  CHECK_THROWS_AS(build_doped_dictionary(1, 1, 1.5, no_cache()), MagicError);
}
