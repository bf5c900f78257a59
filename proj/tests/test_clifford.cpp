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

#include <random>

#include "magic/clifford.hpp"
#include "magic/error.hpp"
#include "magic/operator.hpp"
#include "magic/pauli.hpp"

using namespace magic;

namespace {

// Whether U P U^dag is +-Pauli for every single-qubit X and Z.
bool normalizes_paulis(const CMatrix& u, int n) {
  for (int q = 0; q < n; ++q) {
    for (char letter : {'X', 'Z'}) {
      const CMatrix img = u * PauliString::single(n, q, letter).dense() * u.adjoint();
      bool found = false;
      for (Mask x = 0; x < (Mask{1} << n) && !found; ++x) {
        for (Mask z = 0; z < (Mask{1} << n) && !found; ++z) {
          const CMatrix p = PauliString::hermitian(n, x, z).dense();
          found = (img - p).norm() < 1e-9 || (img + p).norm() < 1e-9;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Clifford group sizes modulo phase") {
  CHECK(CliffordGroup::get(1).size() == 24);
  CHECK(CliffordGroup::get(2).size() == 11520);
  CHECK_THROWS_AS(CliffordGroup::get(3), MagicError);
}

TEST_CASE("Clifford elements are unitary and normalize the Pauli group") {
  for (const auto& u : CliffordGroup::get(1).elements()) {
    CHECK((u * u.adjoint() - CMatrix::Identity(2, 2)).norm() < 1e-10);
    CHECK(normalizes_paulis(u, 1));
  }
  const auto& g2 = CliffordGroup::get(2);
  for (std::size_t i = 0; i < g2.size(); i += 97) CHECK(normalizes_paulis(g2.element(i), 2));
}

TEST_CASE("random Cliffords") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 3; ++n) {
    const CMatrix u = random_clifford(n, rng);
    CHECK((u * u.adjoint() - CMatrix::Identity(u.rows(), u.rows())).norm() < 1e-9);
    CHECK(normalizes_paulis(u, n));
  }
}
