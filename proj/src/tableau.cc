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


#include "qconv/tableau.h"

#include <stdexcept>

#include "qconv/code.h"

namespace qconv {

namespace {

// Power of i picked up by the product (x1,z1) * (x2,z2).
int phase_exponent(bool x1, bool z1, bool x2, bool z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return static_cast<int>(z2) - static_cast<int>(x2);
  if (x1) return static_cast<int>(z2) * (2 * static_cast<int>(x2) - 1);
  return static_cast<int>(x2) * (1 - 2 * static_cast<int>(z2));
}

void conjugate_bits(BitVector& x, BitVector& z, uint8_t& sign, const CliffordGate& g) {
  size_t a = g.first - 1;
  switch (g.kind) {
    case GateKind::H: {
      bool xa = x.get(a), za = z.get(a);
      sign ^= xa & za;
      x.set(a, za);
      z.set(a, xa);
      break;
    }
    case GateKind::CX: {
      size_t b = g.second - 1;
      bool xa = x.get(a), za = z.get(a), xb = x.get(b), zb = z.get(b);
      sign ^= xa & zb & (xb ^ za ^ 1);
      x.set(b, xb ^ xa);
      z.set(a, za ^ zb);
      break;
    }
    case GateKind::CZ: {
      size_t b = g.second - 1;
      bool xa = x.get(a), za = z.get(a), xb = x.get(b), zb = z.get(b);
      sign ^= xa & xb & (za ^ zb);
      z.set(a, za ^ xb);
      z.set(b, zb ^ xa);
      break;
    }
    case GateKind::X:
      sign ^= z.get(a);
      break;
    case GateKind::Z:
      sign ^= x.get(a);
      break;
  }
}

}  // namespace

SignedPauli SignedPauli::from_string(std::string_view text) {
  SignedPauli out;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    out.negative = text.front() == '-';
    text.remove_prefix(1);
  }
  out.pauli = Pauli::from_string(text);
  return out;
}

std::string SignedPauli::str() const { return (negative ? "-" : "+") + pauli.str(); }

void validate_gate(const CliffordGate& g, size_t n) {
  auto check = [n](size_t q) {
    if (q < 1 || q > n) {
      throw std::out_of_range("gate qubit " + std::to_string(q) + " outside 1.." +
                              std::to_string(n));
    }
  };
  check(g.first);
  if (g.is_two_qubit()) {
    check(g.second);
    if (g.first == g.second) {
      throw std::out_of_range("two-qubit gate acts twice on qubit " + std::to_string(g.first));
    }
  }
}

void conjugate(SignedPauli& p, const CliffordGate& g) {
  validate_gate(g, p.pauli.num_qubits());
  uint8_t sign = p.negative;
  conjugate_bits(p.pauli.x_bits(), p.pauli.z_bits(), sign, g);
  p.negative = sign;
}

StabilizerTableau StabilizerTableau::from_bits(const std::vector<uint8_t>& bits, size_t n) {
  if (bits.size() != n) {
    throw std::invalid_argument("tableau_from_bits: " + std::to_string(bits.size()) +
                                " bits for " + std::to_string(n) + " qubits");
  }
  StabilizerTableau t;
  t.n_ = n;
  t.xs_.assign(2 * n, BitVector(n));
  t.zs_.assign(2 * n, BitVector(n));
  t.signs_.assign(2 * n, 0);
  for (size_t q = 0; q < n; q++) {
    t.xs_[q].set(q, true);
    t.zs_[n + q].set(q, true);
    t.signs_[n + q] = bits[q] ? 1 : 0;
  }
  return t;
}

void StabilizerTableau::apply(const CliffordGate& g) {
  validate_gate(g, n_);
  for (size_t r = 0; r < 2 * n_; r++) conjugate_bits(xs_[r], zs_[r], signs_[r], g);
}

void StabilizerTableau::apply_pauli(const Pauli& e) {
  if (e.num_qubits() != n_) throw DimensionError("apply_pauli: qubit count mismatch");
  for (size_t r = 0; r < 2 * n_; r++) {
    signs_[r] ^= BitVector::and_parity(xs_[r], e.z_bits()) ^
                 BitVector::and_parity(zs_[r], e.x_bits());
  }
}

SignedPauli StabilizerTableau::row(size_t r) const {
  SignedPauli p;
  p.pauli = Pauli::identity(n_);
  p.pauli.x_bits() = xs_[r];
  p.pauli.z_bits() = zs_[r];
  p.negative = signs_[r];
  return p;
}

std::optional<bool> StabilizerTableau::solve_sign(const Pauli& p) const {
  if (p.num_qubits() != n_) throw DimensionError("tableau: observable qubit count mismatch");
  for (size_t k = 0; k < n_; k++) {
    if (BitVector::and_parity(xs_[n_ + k], p.z_bits()) ^
        BitVector::and_parity(zs_[n_ + k], p.x_bits())) {
      return std::nullopt;
    }
  }
  BitVector acc_x(n_), acc_z(n_);
  int phase = 0;  // power of i
  for (size_t k = 0; k < n_; k++) {
    if (!(BitVector::and_parity(xs_[k], p.z_bits()) ^ BitVector::and_parity(zs_[k], p.x_bits()))) {
      continue;
    }
    const auto& rx = xs_[n_ + k];
    const auto& rz = zs_[n_ + k];
    phase += 2 * signs_[n_ + k];
    for (size_t q = 0; q < n_; q++) {
      phase += phase_exponent(acc_x.get(q), acc_z.get(q), rx.get(q), rz.get(q));
    }
    acc_x ^= rx;
    acc_z ^= rz;
  }
  if (acc_x != p.x_bits() || acc_z != p.z_bits()) {
    // Commutes with every stabilizer but is not generated by them; impossible
    // for a valid tableau.
    throw std::logic_error("tableau: inconsistent destabilizer decomposition");
  }
  phase = ((phase % 4) + 4) % 4;
  return phase == 2;
}

bool StabilizerTableau::stabilizes(const SignedPauli& p) const {
  auto sign = solve_sign(p.pauli);
  return sign.has_value() && *sign == p.negative;
}

std::optional<bool> StabilizerTableau::measure(const Pauli& observable) const {
  return solve_sign(observable);
}

bool StabilizerTableau::is_valid() const {
  auto sp = [this](size_t a, size_t b) {
    return BitVector::and_parity(xs_[a], zs_[b]) ^ BitVector::and_parity(zs_[a], xs_[b]);
  };
  for (size_t i = 0; i < n_; i++) {
    for (size_t j = 0; j < n_; j++) {
      if (sp(n_ + i, n_ + j)) return false;
      if (sp(i, j)) return false;
      if (sp(i, n_ + j) != (i == j)) return false;
    }
  }
  std::vector<Pauli> rows;
  for (size_t k = 0; k < n_; k++) rows.push_back(stabilizer(k).pauli);
  return SymplecticSpan(n_, rows).rank() == n_;
}

std::string StabilizerTableau::dump() const {
  std::string out;
  for (size_t k = 0; k < n_; k++) {
    out += stabilizer(k).str();
    out += '\n';
  }
  return out;
}

StabilizerTableau tableau_from_bits(const std::vector<uint8_t>& bits, size_t n) {
  return StabilizerTableau::from_bits(bits, n);
}

StabilizerTableau apply_gate(StabilizerTableau t, const CliffordGate& g) {
  t.apply(g);
  return t;
}

bool stabilizes(const StabilizerTableau& t, const SignedPauli& p) { return t.stabilizes(p); }

std::optional<bool> measure_row(const StabilizerTableau& t, const Pauli& observable) {
  return t.measure(observable);
}

}  // namespace qconv
