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
#include <random>

#include "magic/channel.hpp"
#include "magic/clifford.hpp"
#include "magic/error.hpp"
#include "magic/operator.hpp"
#include "magic/stabilizer.hpp"

using namespace magic;

namespace {

CMatrix hadamard() {
  CMatrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

}  // namespace

TEST_CASE("Choi state examples") {
  const auto id = choi_state(QuantumChannel::unitary(CMatrix::Identity(2, 2)));
  CVector bell = CVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  CHECK((id.rho.matrix() - bell * bell.adjoint()).norm() < 1e-12);
  CHECK(id.marginal_error < 1e-12);

  const auto full = choi_state(QuantumChannel::depolarized_unitary(CMatrix::Identity(2, 2), 1.0));
  CHECK((full.rho.matrix() - CMatrix::Identity(4, 4) / 4.0).norm() < 1e-12);

  const auto deph = choi_state(QuantumChannel::dephasing(0.5));
  CHECK(std::abs(deph.rho.matrix()(0, 3)) < 1e-12);
  CHECK(deph.rho.matrix()(0, 0).real() == doctest::Approx(0.5));
}

TEST_CASE("Kraus validation") {
  CMatrix k = CMatrix::Identity(2, 2) * 0.9;
  try {
    QuantumChannel ch({k});
    FAIL("expected an error");
  } catch (const MagicError& e) {
    CHECK(e.code() == ErrorCode::kNotTracePreserving);
  }
  CHECK_THROWS_AS(QuantumChannel({CMatrix::Identity(2, 3)}), MagicError);
  CHECK_THROWS_AS(QuantumChannel(std::vector<CMatrix>{}), MagicError);
}

TEST_CASE("random channels have maximally mixed Choi marginals") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 2;
    const auto ch = QuantumChannel::random(n, 1 + k % 4, rng);
    const auto c = choi_state(ch);
    CHECK(c.marginal_error <= 1e-9);
    CHECK(c.rho.min_eigenvalue() >= -1e-10);
  }
}

TEST_CASE("Clifford pre- and post-composition preserves membership") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const auto ch = QuantumChannel::random(1, 2, rng);
    const auto pre = QuantumChannel::unitary(random_clifford(1, rng));
    const auto post = QuantumChannel::unitary(random_clifford(1, rng));
    const auto a = classify_cspc(ch, 0.05);
    const auto b = classify_cspc(pre.compose(ch).compose(post), 0.05);
    CHECK(a.verdict.distance == doctest::Approx(b.verdict.distance).epsilon(1e-6));
  }
}

TEST_CASE("stabilizer-preserving channels map stabilizer states into the polytope") {
  std::mt19937_64 rng(9);
  const auto& states = enumerate_stabilizer_states(2);
  for (int trial = 0; trial < 5; ++trial) {
    const auto u = QuantumChannel::unitary(random_clifford(1, rng));
    const auto noisy = QuantumChannel::depolarized_unitary(t_gate(), 0.5);
    REQUIRE(classify_cspc(u, 0.05).verdict.distance <= kZeroDistance);
    REQUIRE(classify_cspc(noisy, 0.05).verdict.distance <= kZeroDistance);
    for (const auto& s : states) {
      for (const auto* ch : {&u, &noisy}) {
        const DensityMatrix out(ch->apply(s.density()));
        CHECK(project_onto_polytope(out, *Dictionary::stabilizer(2)).distance <= 1e-7);
      }
    }
  }
}

TEST_CASE("classification") {
  CHECK(classify_cspc(QuantumChannel::unitary(hadamard()), 0.05).decision == Decision::kYes);
  const auto t = classify_cspc(QuantumChannel::unitary(t_gate()), 0.05);
  CHECK(t.decision == Decision::kNo);
  REQUIRE(t.witness.has_value());
  CHECK(t.witness->margin > 0.0);
  CHECK(t.witness->value_on_rho > t.witness->gamma);

  const auto d = classify_ctdspc(QuantumChannel::unitary(t_gate()), 1, 0.5, 0.05);
  CHECK(d.decision == Decision::kYes);
  CHECK(classify_ctdspc(QuantumChannel::unitary(hadamard()), 0, 0.5, 0.05).decision == Decision::kYes);
  CHECK(classify_ctdspc(QuantumChannel::unitary(t_gate()), 0, 0.5, 0.05).decision == Decision::kNo);
}

TEST_CASE("size caps") {
  std::mt19937_64 rng(11);
  const auto ch = QuantumChannel::random(2, 1, rng);
  try {
    classify_cspc(ch, 0.05);
    FAIL("expected an error");
  } catch (const MagicError& e) {
    CHECK(e.code() == ErrorCode::kSizeCapExceeded);
  }
}

TEST_CASE("depolarizing threshold for T") {
  const auto b = depolarizing_threshold(t_gate(), 0.02);
  CHECK(b.hi - b.lo <= 0.02 + 1e-12);
  CHECK(b.hi >= 1.0 - 1.0 / std::sqrt(2.0) - 0.02);
  CHECK(classify_cspc(QuantumChannel::depolarized_unitary(t_gate(), b.hi), 0.05).verdict.distance <= kZeroDistance);
  CHECK(classify_cspc(QuantumChannel::depolarized_unitary(t_gate(), b.lo), 0.05).verdict.distance > kZeroDistance);
}
