// Copyright 2026 The qconv Authors
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


#include "qconv/pauli.h"

namespace qconv {

namespace {

void require_same_length(const Pauli& a, const Pauli& b, const char* op) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError(std::string(op) + ": qubit count mismatch (" +
                         std::to_string(a.num_qubits()) + " vs " +
                         std::to_string(b.num_qubits()) + ")");
  }
}

}  // namespace

Pauli Pauli::from_string(std::string_view text) {
  if (text.empty()) {
    throw PauliParseError("empty Pauli string", 0);
  }
  Pauli p(text.size());
  for (size_t k = 0; k < text.size(); k++) {
    switch (text[k]) {
      case 'I':
        break;
      case 'X':
        p.x_.set(k, true);
        break;
      case 'Z':
        p.z_.set(k, true);
        break;
      case 'Y':
        p.x_.set(k, true);
        p.z_.set(k, true);
        break;
      default:
        throw PauliParseError("invalid Pauli character '" + std::string(1, text[k]) +
                                  "' at position " + std::to_string(k + 1),
                              k + 1);
    }
  }
  return p;
}

Pauli Pauli::single(size_t n, size_t qubit, SingleQubitPauli kind) {
  Pauli p(n);
  p.set(qubit, kind);
  return p;
}

void Pauli::set(size_t qubit, SingleQubitPauli kind) {
  if (qubit < 1 || qubit > num_qubits()) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " outside 1.." +
                            std::to_string(num_qubits()));
  }
  x_.set(qubit - 1, x_bit(kind));
  z_.set(qubit - 1, z_bit(kind));
}

std::string Pauli::str() const {
  std::string out(num_qubits(), 'I');
  for (size_t k = 0; k < out.size(); k++) {
    out[k] = pauli_char(make_pauli(x_.get(k), z_.get(k)));
  }
  return out;
}

bool symplectic_product(const Pauli& a, const Pauli& b) {
  require_same_length(a, b, "symplectic_product");
  return BitVector::and_parity(a.x_bits(), b.z_bits()) ^
         BitVector::and_parity(a.z_bits(), b.x_bits());
}

Pauli multiply(const Pauli& a, const Pauli& b) {
  require_same_length(a, b, "multiply");
  Pauli out = a;
  out.x_bits() ^= b.x_bits();
  out.z_bits() ^= b.z_bits();
  return out;
}

size_t weight(const Pauli& p) { return (p.x_bits() | p.z_bits()).popcount(); }

Pauli shift(const Pauli& p, size_t offset, size_t n_total) {
  if (offset + p.num_qubits() > n_total) {
    throw DimensionError("shift: offset " + std::to_string(offset) + " + length " +
                         std::to_string(p.num_qubits()) + " exceeds " +
                         std::to_string(n_total) + " qubits");
  }
  Pauli out = Pauli::identity(n_total);
  for (size_t k = 0; k < p.num_qubits(); k++) {
    out.x_bits().set(offset + k, p.x_bits().get(k));
    out.z_bits().set(offset + k, p.z_bits().get(k));
  }
  return out;
}

}  // namespace qconv
