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


#ifndef QCONV_PAULI_H
#define QCONV_PAULI_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qconv/bit_vector.h"

namespace qconv {

/// Single-qubit Pauli encoded as the bit pair x | (z << 1).
enum class SingleQubitPauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr bool x_bit(SingleQubitPauli p) { return static_cast<uint8_t>(p) & 1U; }
constexpr bool z_bit(SingleQubitPauli p) { return static_cast<uint8_t>(p) & 2U; }
constexpr SingleQubitPauli make_pauli(bool x, bool z) {
  return static_cast<SingleQubitPauli>(static_cast<uint8_t>(x) | (static_cast<uint8_t>(z) << 1));
}
constexpr char pauli_char(SingleQubitPauli p) { return "IXZY"[static_cast<uint8_t>(p)]; }

/// Symplectic product of two single-qubit Paulis given as 2-bit codes.
constexpr bool anticommutes(uint8_t a, uint8_t b) {
  return ((a & 1U) & (b >> 1)) ^ ((a >> 1) & (b & 1U));
}

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PauliParseError : public std::invalid_argument {
 public:
  PauliParseError(const std::string& what, size_t position)
      : std::invalid_argument(what), position_(position) {}
  /// 1-based character position of the offending character.
  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// Phase-free n-qubit Pauli operator. P, -P and +-iP are the same value.
///
/// Qubits are numbered from 1 in every public accessor, matching the text
/// form where the leftmost character is qubit 1.
class Pauli {
 public:
  Pauli() = default;
  static Pauli identity(size_t n) { return Pauli(n); }
  static Pauli from_string(std::string_view text);
  static Pauli single(size_t n, size_t qubit, SingleQubitPauli kind);

  size_t num_qubits() const { return x_.size(); }

  SingleQubitPauli at(size_t qubit) const {
    return make_pauli(x_.get(qubit - 1), z_.get(qubit - 1));
  }
  void set(size_t qubit, SingleQubitPauli kind);

  const BitVector& x_bits() const { return x_; }
  const BitVector& z_bits() const { return z_; }
  BitVector& x_bits() { return x_; }
  BitVector& z_bits() { return z_; }

  bool is_identity() const { return x_.none() && z_.none(); }
  std::string str() const;

  bool operator==(const Pauli& other) const = default;

 private:
  explicit Pauli(size_t n) : x_(n), z_(n) {}
  BitVector x_;
  BitVector z_;
};

/// 0 if a and b commute, 1 if they anticommute.
bool symplectic_product(const Pauli& a, const Pauli& b);

/// Product up to global phase.
Pauli multiply(const Pauli& a, const Pauli& b);

size_t weight(const Pauli& p);

/// Embeds p at qubits offset+1 .. offset+p.num_qubits() of an n_total-qubit identity.
Pauli shift(const Pauli& p, size_t offset, size_t n_total);

}  // namespace qconv

#endif  // QCONV_PAULI_H
