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

DensityMatrix random_mixed(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const Index d = Index{1} << n;
  CMatrix m(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  CMatrix rho = m * m.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(CMatrix((rho + rho.adjoint()) * 0.5));
}

}  // namespace

TEST_CASE("stabilizer entropy of |T>") {
  // sum_P tr(P T)^4 / 2 = (1 + 1/4 + 1/4) / 2 = 3/4, so M2 = log2(4/3).
  CHECK(stabilizer_renyi_entropy(t_ket(), 2.0) == doctest::Approx(std::log2(4.0 / 3.0)).epsilon(1e-12));
  CHECK(stabilizer_renyi_entropy(kron(t_ket(), t_ket()), 2.0) ==
        doctest::Approx(2 * std::log2(4.0 / 3.0)).epsilon(1e-12));
  CHECK(std::abs(stabilizer_renyi_entropy(basis_ket(3, 5), 2.0)) < 1e-12);
}

TEST_CASE("entropy rejects mixed states") {
  try {
    stabilizer_renyi_entropy(DensityMatrix::maximally_mixed(1), 2.0);
    FAIL("expected an error");
  } catch (const MagicError& e) {
    CHECK(e.code() == ErrorCode::kMixedState);
  }
}

TEST_CASE("stabilizer fidelity values") {
  const double c2 = (2 + std::sqrt(2.0)) / 4;
  CHECK(stabilizer_fidelity(DensityMatrix::from_ket(t_ket())) == doctest::Approx(c2).epsilon(1e-12));
  CHECK(stabilizer_fidelity(DensityMatrix::from_ket(kron(t_ket(), t_ket()))) ==
        doctest::Approx(c2 * c2).epsilon(1e-12));
  CHECK(stabilizer_fidelity(DensityMatrix::from_ket(basis_ket(2, 1))) == doctest::Approx(1.0));
}

TEST_CASE("robustness values") {
  CHECK(robustness_of_magic(DensityMatrix::maximally_mixed(1)).value == doctest::Approx(1.0).epsilon(1e-9));
  const auto t = robustness_of_magic(DensityMatrix::from_ket(t_ket()));
  CHECK(t.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(t.duality_gap < 1e-9);
  CHECK(t.max_dual_constraint <= 1 + 1e-9);
  CHECK(t.reconstruction_error < 1e-9);
  for (const auto& s : enumerate_stabilizer_states(2)) {
    CHECK(robustness_of_magic(DensityMatrix::from_ket(s.amplitudes())).value == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("verbose mode reports the one-sided program") {
  const auto inside = robustness_of_magic(DensityMatrix::maximally_mixed(1), true);
  REQUIRE(inside.one_sided_value.has_value());
  CHECK(*inside.one_sided_value == doctest::Approx(1.0));
  const auto outside = robustness_of_magic(DensityMatrix::from_ket(t_ket()), true);
  CHECK_FALSE(outside.one_sided_value.has_value());
}

TEST_CASE("dual witness norm bound and duality on random states") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const int n = 1 + k % 2;
    const double d = std::ldexp(1.0, n);
    const auto cert = robustness_of_magic(random_mixed(n, rng));
    CHECK(cert.duality_gap <= 1e-7);
    CHECK(cert.dual_witness.matrix().norm() <= std::sqrt(d * (d + 1)) + 1e-6);
  }
}

TEST_CASE("Clifford invariance") {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 2; ++n) {
    const CVector psi = haar_state(n, rng);
    const DensityMatrix rho = DensityMatrix::from_ket(psi);
    const double m2 = stabilizer_renyi_entropy(psi, 2.0);
    const double f = stabilizer_fidelity(rho);
    const double r = robustness_of_magic(rho).value;
    for (int k = 0; k < 20; ++k) {
      const CMatrix u = random_clifford(n, rng);
      const CVector phi = u * psi;
      const DensityMatrix sigma = DensityMatrix::from_ket(phi);
      CHECK(std::abs(stabilizer_renyi_entropy(phi, 2.0) - m2) < 1e-8);
      CHECK(std::abs(stabilizer_fidelity(sigma) - f) < 1e-8);
      CHECK(std::abs(robustness_of_magic(sigma).value - r) < 1e-8);
    }
  }
}

TEST_CASE("entropy ordering and fidelity upper bound") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + k % 2;
    const CVector psi = haar_state(n, rng);
    const double m1 = stabilizer_renyi_entropy(psi, 0.5);
    const double m2 = stabilizer_renyi_entropy(psi, 2.0);
    const double m3 = stabilizer_renyi_entropy(psi, 3.0);
    CHECK(m1 >= m2 - 1e-9);
    CHECK(m2 >= m3 - 1e-9);
    CHECK(m3 >= -1e-12);
    const double p6 = std::exp2(-2.0 * m3);
    CHECK(stabilizer_fidelity(DensityMatrix::from_ket(psi)) <= std::pow(p6, 1.0 / 6.0) + 1e-9);
  }
}
