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


#ifndef QCONV_CODE_H
#define QCONV_CODE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/bit_vector.h"
#include "qconv/pauli.h"

namespace qconv {

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A non-identity tensor factor of an operator, with a 0-based qubit index.
struct LocalTerm {
  uint32_t qubit0;
  uint8_t code;  // SingleQubitPauli as x | z << 1
};

/// Finite truncation of the rate-1/5 convolutional stabilizer code with
/// N logical qubits on n = 5N + 2 physical qubits.
///
/// Generators are ordered [M_0, M_1, ..., M_{4N}, M_inf]; M_{4i+j} is ZXXZ
/// on qubits 5i+j .. 5i+j+3. Logical qubit i (1-based) has its operators on
/// the window 5(i-1)+1 .. 5(i-1)+6 and its input position at 5i+1.
class ConvolutionalCode {
 public:
  static ConvolutionalCode build(size_t blocks);

  /// Arbitrary operator lists, used for loaded descriptions and negative
  /// controls. All operators must share one qubit count.
  static ConvolutionalCode from_parts(size_t blocks, std::vector<Pauli> generators,
                                      std::vector<Pauli> logical_x, std::vector<Pauli> logical_z);

  size_t blocks() const { return blocks_; }
  size_t num_qubits() const { return num_qubits_; }
  size_t num_generators() const { return generators_.size(); }

  const std::vector<Pauli>& generators() const { return generators_; }
  const std::vector<Pauli>& logical_x() const { return logical_x_; }
  const std::vector<Pauli>& logical_z() const { return logical_z_; }

  /// 1-based positions 5i+1 (i = 1..N) where the input qubits enter.
  std::vector<size_t> info_positions() const;

  const std::vector<LocalTerm>& generator_terms(size_t k) const { return generator_terms_[k]; }
  const std::vector<LocalTerm>& logical_x_terms(size_t i) const { return logical_x_terms_[i]; }
  const std::vector<LocalTerm>& logical_z_terms(size_t i) const { return logical_z_terms_[i]; }

  /// True iff the operators are exactly the ones build(blocks()) produces.
  bool is_canonical() const { return canonical_; }

 private:
  ConvolutionalCode() = default;
  void index_terms();

  size_t blocks_ = 0;
  size_t num_qubits_ = 0;
  std::vector<Pauli> generators_;
  std::vector<Pauli> logical_x_;
  std::vector<Pauli> logical_z_;
  std::vector<std::vector<LocalTerm>> generator_terms_;
  std::vector<std::vector<LocalTerm>> logical_x_terms_;
  std::vector<std::vector<LocalTerm>> logical_z_terms_;
  bool canonical_ = false;
};

inline ConvolutionalCode build_code(size_t blocks) { return ConvolutionalCode::build(blocks); }

/// Bits ordered [s(M_0), s(M_1), ..., s(M_4N), s(M_inf)]; 1 means eigenvalue -1.
class Syndrome {
 public:
  Syndrome() = default;
  explicit Syndrome(size_t num_bits) : bits_(num_bits) {}
  explicit Syndrome(BitVector bits) : bits_(std::move(bits)) {}
  static Syndrome from_string(std::string_view text);

  size_t size() const { return bits_.size(); }
  bool operator[](size_t k) const { return bits_.get(k); }
  void set(size_t k, bool v) { bits_.set(k, v); }
  const BitVector& bits() const { return bits_; }
  bool is_zero() const { return bits_.none(); }
  std::string str() const { return bits_.str(); }

  bool operator==(const Syndrome& other) const = default;

 private:
  BitVector bits_;
};

Syndrome syndrome_of(const ConvolutionalCode& code, const Pauli& error);

/// Symplectic product of p with an operator given by its local terms.
bool symplectic_product(const Pauli& p, const std::vector<LocalTerm>& terms);

/// GF(2) row space of a set of Paulis in the symplectic (x | z) picture.
class SymplecticSpan {
 public:
  SymplecticSpan(size_t num_qubits, const std::vector<Pauli>& rows);

  size_t rank() const { return basis_.size(); }
  bool contains(const Pauli& p) const;

 private:
  BitVector reduce(BitVector v) const;

  size_t num_qubits_;
  std::vector<BitVector> basis_;
  std::vector<size_t> pivots_;
};

/// Phase-free membership in the stabilizer group.
bool in_stabilizer(const ConvolutionalCode& code, const Pauli& p);

/// [sp(p, X_1), sp(p, Z_1), ..., sp(p, X_N), sp(p, Z_N)] for a zero-syndrome p.
BitVector logical_action(const ConvolutionalCode& code, const Pauli& p);

struct LogicalMembershipCheck {
  size_t logical;  // 1-based
  bool x_in_normalizer;
  bool z_in_normalizer;
  bool x_outside_stabilizer;
  bool z_outside_stabilizer;
  bool ok() const {
    return x_in_normalizer && z_in_normalizer && x_outside_stabilizer && z_outside_stabilizer;
  }
};

/// Commutation relations between logical pairs i <= j (1-based). For i == j
/// the XZ relation means "anticommute"; otherwise both cross terms commute.
struct LogicalPairCheck {
  size_t i;
  size_t j;
  bool xx_commute;
  bool zz_commute;
  bool xz_relation;
  bool ok() const { return xx_commute && zz_commute && xz_relation; }
};

struct VerifyReport {
  size_t num_generators = 0;
  size_t num_logical = 0;
  bool generator_commutation = false;
  size_t generator_rank = 0;
  int64_t encoded_dimension_exponent = 0;
  std::vector<LogicalMembershipCheck> membership;
  std::vector<LogicalPairCheck> pairs;
  /// Human-readable description of the first few failed checks.
  std::vector<std::string> failures;

  bool generators_independent() const { return generator_rank == num_generators; }
  bool logical_conditions_hold() const;
  bool all_passed() const;
};

VerifyReport verify_code(const ConvolutionalCode& code);

/// Checks that M_{4i+1} .. M_{4i+4} meet qubits 1..5i+2 only inside {5i+1, 5i+2}.
bool trellis_locality_holds(const ConvolutionalCode& code);

/// Smallest weight w <= max_weight of a zero-syndrome Pauli with nontrivial
/// logical action, by exhaustive enumeration.
std::optional<size_t> min_logical_weight_probe(const ConvolutionalCode& code, size_t max_weight);

/// JSON description: blocks, qubits, generators, logical_x, logical_z, info_positions.
std::string code_to_json(const ConvolutionalCode& code);
ConvolutionalCode code_from_json(std::string_view text);

}  // namespace qconv

#endif  // QCONV_CODE_H
