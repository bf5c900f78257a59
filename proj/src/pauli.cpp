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

#include "magic/pauli.hpp"

#include "magic/error.hpp"

namespace magic {

namespace {

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliString::PauliString(int n_qubits, Mask x_bits, Mask z_bits, int phase_exp)
    : n_(n_qubits), x_(x_bits), z_(z_bits), phase_(phase_exp & 3) {
  if (n_qubits < 1 || n_qubits > 30) {
    fail(ErrorCode::kInvalidArgument, "Pauli qubit count out of range");
  }
  const Mask limit = Mask{1} << n_qubits;
  if (x_bits >= limit || z_bits >= limit) {
    fail(ErrorCode::kInvalidArgument, "Pauli mask wider than qubit count");
  }
}

PauliString PauliString::identity(int n_qubits) { return PauliString(n_qubits, 0, 0, 0); }

PauliString PauliString::hermitian(int n_qubits, Mask x_bits, Mask z_bits) {
  return PauliString(n_qubits, x_bits, z_bits, popcount(x_bits & z_bits));
}

PauliString PauliString::single(int n_qubits, int qubit, char letter) {
  if (qubit < 0 || qubit >= n_qubits) fail(ErrorCode::kInvalidArgument, "qubit out of range");
  const Mask b = qubit_bit(n_qubits, qubit);
  switch (letter) {
    case 'I': return identity(n_qubits);
    case 'X': return hermitian(n_qubits, b, 0);
    case 'Y': return hermitian(n_qubits, b, b);
    case 'Z': return hermitian(n_qubits, 0, b);
    default: fail(ErrorCode::kInvalidArgument, std::string("bad Pauli letter ") + letter);
  }
}

PauliString PauliString::parse(std::string_view text) {
  int sign = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') sign = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    sign += 1;
    ++pos;
  }
  const std::string_view letters = text.substr(pos);
  const int n = static_cast<int>(letters.size());
  if (n < 1 || n > kMaxQubits) fail(ErrorCode::kInvalidArgument, "bad Pauli string length");
  Mask x = 0;
  Mask z = 0;
  for (int q = 0; q < n; ++q) {
    const Mask b = qubit_bit(n, q);
    switch (letters[q]) {
      case 'I': break;
      case 'X': x |= b; break;
      case 'Y': x |= b; z |= b; break;
      case 'Z': z |= b; break;
      default: fail(ErrorCode::kInvalidArgument, "bad Pauli letter in " + std::string(text));
    }
  }
  return PauliString(n, x, z, sign + popcount(x & z));
}

bool PauliString::commutes_with(const PauliString& other) const {
  return parity((x_ & other.z_) ^ (z_ & other.x_)) == 0;
}

PauliString PauliString::operator*(const PauliString& other) const {
  if (n_ != other.n_) fail(ErrorCode::kDimensionMismatch, "Pauli product qubit mismatch");
  return PauliString(n_, x_ ^ other.x_, z_ ^ other.z_,
                     phase_ + other.phase_ + 2 * popcount(z_ & other.x_));
}

CMatrix PauliString::dense() const {
  const Index d = Index{1} << n_;
  CMatrix m = CMatrix::Zero(d, d);
  for (Index b = 0; b < d; ++b) {
    const int e = (phase_ + 2 * popcount(z_ & static_cast<Mask>(b))) & 3;
    m(b ^ x_, b) = kIPow[e];
  }
  return m;
}

void PauliString::apply(const CVector& in, CVector& out) const {
  const Index d = Index{1} << n_;
  if (in.size() != d) fail(ErrorCode::kDimensionMismatch, "Pauli apply size mismatch");
  out.resize(d);
  for (Index b = 0; b < d; ++b) {
    const int e = (phase_ + 2 * popcount(z_ & static_cast<Mask>(b))) & 3;
    out(b ^ x_) = kIPow[e] * in(b);
  }
}

std::string PauliString::str() const {
  static const char* kSign[4] = {"+", "+i", "-", "-i"};
  std::string s = kSign[sign_exp()];
  for (int q = 0; q < n_; ++q) {
    const Mask b = qubit_bit(n_, q);
    const bool xb = x_ & b;
    const bool zb = z_ & b;
    s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return s;
}

int symplectic_rank(const std::vector<PauliString>& paulis) {
  std::vector<std::uint64_t> rows;
  for (const auto& p : paulis) {
    rows.push_back((static_cast<std::uint64_t>(p.x_bits()) << 32) | p.z_bits());
  }
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t m = std::uint64_t{1} << bit;
    std::size_t piv = rank;
    while (piv < rows.size() && !(rows[piv] & m)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && (rows[r] & m)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace magic
