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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "magic/types.hpp"

namespace magic {

// P = i^phase * X^x * Z^z, with masks in basis-index bit order.
class PauliString {
 public:
  PauliString() = default;
  PauliString(int n_qubits, Mask x_bits, Mask z_bits, int phase_exp = 0);

  static PauliString identity(int n_qubits);
  // Hermitian Pauli with a '+' sign in letter form (Y = iXZ).
  static PauliString hermitian(int n_qubits, Mask x_bits, Mask z_bits);
  static PauliString single(int n_qubits, int qubit, char letter);
  // Accepts an optional sign prefix (+, -, i, +i, -i) followed by I/X/Y/Z.
  static PauliString parse(std::string_view text);

  int num_qubits() const { return n_; }
  Mask x_bits() const { return x_; }
  Mask z_bits() const { return z_; }
  int phase_exp() const { return phase_; }

  // Power of i in front of the letter form.
  int sign_exp() const { return (phase_ - popcount(x_ & z_)) & 3; }
  bool is_hermitian() const { return (sign_exp() & 1) == 0; }
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool commutes_with(const PauliString& other) const;

  PauliString operator*(const PauliString& other) const;
  PauliString negated() const { return PauliString(n_, x_, z_, phase_ + 2); }

  CMatrix dense() const;
  // out = P * in.
  void apply(const CVector& in, CVector& out) const;
  std::string str() const;

  bool operator==(const PauliString& other) const = default;

 private:
  int n_ = 0;
  Mask x_ = 0;
  Mask z_ = 0;
  int phase_ = 0;
};

// Index of the Hermitian Pauli (x, z) in spectra: (x << n) | z.
inline std::size_t pauli_index(int n, Mask x, Mask z) {
  return (static_cast<std::size_t>(x) << n) | z;
}

// GF(2) rank of the symplectic vectors (x|z).
int symplectic_rank(const std::vector<PauliString>& paulis);

}  // namespace magic
