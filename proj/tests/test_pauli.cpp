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

#include "magic/error.hpp"
#include "magic/operator.hpp"
#include "magic/pauli.hpp"

using namespace magic;

TEST_CASE("single-qubit products carry the right phases") {
  const auto x = PauliString::parse("X");
  const auto y = PauliString::parse("Y");
  const auto z = PauliString::parse("Z");
  CHECK(x * y == PauliString::parse("iZ"));
  CHECK(y * x == PauliString::parse("-iZ"));
  CHECK(z * x == PauliString::parse("iY"));
  CHECK((x * x).is_identity());
  CHECK((y * y).is_identity());
}

TEST_CASE("dense products agree with symbolic products") {
  const char* words[] = {"XZI", "YYZ", "-IXY", "iZZX", "XIY"};
  for (auto a : words) {
    for (auto b : words) {
      const auto p = PauliString::parse(a);
      const auto q = PauliString::parse(b);
      CHECK(((p * q).dense() - p.dense() * q.dense()).norm() < 1e-12);
      const bool commute = (p.dense() * q.dense() - q.dense() * p.dense()).norm() < 1e-12;
      CHECK(p.commutes_with(q) == commute);
    }
  }
}

TEST_CASE("parse and print round trip") {
  for (auto s : {"+XZI", "-YYI", "+iZ", "-iXY"}) CHECK(PauliString::parse(s).str() == s);
  CHECK_THROWS_AS(PauliString::parse("+XQ"), MagicError);
}

TEST_CASE("hermitian strings square to identity") {
  const auto p = PauliString::parse("-XYZ");
  CHECK(p.is_hermitian());
  CHECK((p.dense() - p.dense().adjoint()).norm() < 1e-12);
  CHECK((p.dense() * p.dense() - CMatrix::Identity(8, 8)).norm() < 1e-12);
  CHECK_FALSE(PauliString::parse("iX").is_hermitian());
}

TEST_CASE("qubit zero is the most significant bit") {
  const auto x0 = PauliString::single(2, 0, 'X');
  CVector v = basis_ket(2, 0);
  CVector w = x0.dense() * v;
  CHECK(std::abs(w(2) - 1.0) < 1e-12);
}

TEST_CASE("pauli spectrum of |0> and reconstruction") {
  const auto spec = pauli_spectrum(basis_ket(1, 0));
  CHECK(spec[pauli_index(1, 0, 0)] == doctest::Approx(1.0));
  CHECK(spec[pauli_index(1, 0, 1)] == doctest::Approx(1.0));
  CHECK(spec[pauli_index(1, 1, 0)] == doctest::Approx(0.0));
  CHECK(spec[pauli_index(1, 1, 1)] == doctest::Approx(0.0));
  const CMatrix rho = from_pauli_spectrum(1, spec);
  CHECK(std::abs(rho(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(rho(1, 1)) < 1e-12);
}

TEST_CASE("symplectic rank") {
  std::vector<PauliString> gens = {PauliString::parse("XX"), PauliString::parse("ZZ"), PauliString::parse("YY")};
  CHECK(symplectic_rank(gens) == 2);
}
