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


#ifndef QCONV_TABLEAU_H
#define QCONV_TABLEAU_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/pauli.h"

namespace qconv {

/// Hermitian Pauli with a +-1 sign.
///
/// Sign convention: the bit pair (x, z) denotes X^x Z^z times i^{xz}, so
/// (1,1) is Y = iXZ. Conjugation rules used throughout (sign flips only
/// where listed):
///
///   gate      | X_a       | Z_a     | X_b      | Z_b     | sign flip when
///   H(a)      | Z_a       | X_a     |          |         | row has Y_a
///   CX(a,b)   | X_a X_b   | Z_a     | X_b      | Z_a Z_b | x_a z_b (x_b ^ z_a ^ 1)
///   CZ(a,b)   | X_a Z_b   | Z_a     | Z_a X_b  | Z_b     | x_a x_b (z_a ^ z_b)
///   X(a)      | X_a       | -Z_a    |          |         | z_a
///   Z(a)      | -X_a      | Z_a     |          |         | x_a
struct SignedPauli {
  Pauli pauli;
  bool negative = false;

  /// Accepts an optional leading '+' or '-'.
  static SignedPauli from_string(std::string_view text);
  std::string str() const;
  bool operator==(const SignedPauli& other) const = default;
};

enum class GateKind : uint8_t { H, CX, CZ, X, Z };

/// Qubit indices are 1-based. For one-qubit kinds `second` is unused.
struct CliffordGate {
  GateKind kind;
  size_t first;
  size_t second = 0;

  static CliffordGate h(size_t q) { return {GateKind::H, q, 0}; }
  static CliffordGate cx(size_t control, size_t target) { return {GateKind::CX, control, target}; }
  static CliffordGate cz(size_t a, size_t b) { return {GateKind::CZ, a, b}; }
  static CliffordGate x(size_t q) { return {GateKind::X, q, 0}; }
  static CliffordGate z(size_t q) { return {GateKind::Z, q, 0}; }

  bool is_two_qubit() const { return kind == GateKind::CX || kind == GateKind::CZ; }
  /// Largest qubit index touched.
  size_t max_qubit() const { return is_two_qubit() && second > first ? second : first; }
  bool operator==(const CliffordGate& other) const = default;
};

/// Throws std::out_of_range on indices outside 1..n or a repeated qubit.
void validate_gate(const CliffordGate& g, size_t n);

/// p <- g p g^dagger, signs included.
void conjugate(SignedPauli& p, const CliffordGate& g);

/// Stabilizer state on n qubits stored with destabilizers, so sign solves
/// are a single pass over the rows.
class StabilizerTableau {
 public:
  /// Computational basis state: stabilizers (-1)^{bits[q]} Z_q.
  static StabilizerTableau from_bits(const std::vector<uint8_t>& bits, size_t n);

  size_t num_qubits() const { return n_; }

  void apply(const CliffordGate& g);
  /// Conjugation by a Pauli error; only signs change.
  void apply_pauli(const Pauli& e);

  SignedPauli stabilizer(size_t k) const { return row(n_ + k); }
  SignedPauli destabilizer(size_t k) const { return row(k); }

  bool stabilizes(const SignedPauli& p) const;
  /// Deterministic outcome bit (1 = eigenvalue -1), or nullopt when the
  /// observable anticommutes with some stabilizer.
  std::optional<bool> measure(const Pauli& observable) const;

  /// Rows pairwise commute, destabilizers pair with stabilizers, rank n.
  bool is_valid() const;

  /// One signed stabilizer string per line, e.g. "+XZII".
  std::string dump() const;

  bool operator==(const StabilizerTableau& other) const = default;

 private:
  SignedPauli row(size_t r) const;
  /// Sign of the product of the stabilizers selected by the destabilizers
  /// anticommuting with p; nullopt if p is not in the stabilizer group up to sign.
  std::optional<bool> solve_sign(const Pauli& p) const;

  size_t n_ = 0;
  // Rows 0..n-1 are destabilizers, n..2n-1 stabilizers.
  std::vector<BitVector> xs_;
  std::vector<BitVector> zs_;
  std::vector<uint8_t> signs_;
};

StabilizerTableau tableau_from_bits(const std::vector<uint8_t>& bits, size_t n);
StabilizerTableau apply_gate(StabilizerTableau t, const CliffordGate& g);
bool stabilizes(const StabilizerTableau& t, const SignedPauli& p);
std::optional<bool> measure_row(const StabilizerTableau& t, const Pauli& observable);

}  // namespace qconv

#endif  // QCONV_TABLEAU_H
