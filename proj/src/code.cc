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


#include "qconv/code.h"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace qconv {

namespace {

std::vector<LocalTerm> terms_of(const Pauli& p) {
  std::vector<LocalTerm> out;
  for (size_t q = 1; q <= p.num_qubits(); q++) {
    auto kind = p.at(q);
    if (kind != SingleQubitPauli::I) {
      out.push_back({static_cast<uint32_t>(q - 1), static_cast<uint8_t>(kind)});
    }
  }
  return out;
}

bool supports_overlap(const std::vector<LocalTerm>& a, const std::vector<LocalTerm>& b) {
  if (a.empty() || b.empty()) return false;
  return a.front().qubit0 <= b.back().qubit0 && b.front().qubit0 <= a.back().qubit0;
}

void require_qubits(const ConvolutionalCode& code, const Pauli& p, const char* op) {
  if (p.num_qubits() != code.num_qubits()) {
    throw DimensionError(std::string(op) + ": operator has " + std::to_string(p.num_qubits()) +
                         " qubits, code has " + std::to_string(code.num_qubits()));
  }
}

}  // namespace

ConvolutionalCode ConvolutionalCode::build(size_t blocks) {
  if (blocks < 1) {
    throw std::domain_error("build_code: need at least one logical block, got " +
                            std::to_string(blocks));
  }
  ConvolutionalCode code;
  code.blocks_ = blocks;
  code.num_qubits_ = 5 * blocks + 2;
  size_t n = code.num_qubits_;

  static const Pauli kFirst = Pauli::from_string("XZ");
  static const Pauli kBulk = Pauli::from_string("ZXXZ");
  static const Pauli kLast = Pauli::from_string("ZX");
  static const Pauli kLogicalX = Pauli::from_string("IZIXIZ");
  static const Pauli kLogicalZ = Pauli::from_string("IZZZZZ");

  code.generators_.reserve(4 * blocks + 2);
  code.generators_.push_back(shift(kFirst, 0, n));
  for (size_t i = 0; i < blocks; i++) {
    for (size_t j = 1; j <= 4; j++) {
      code.generators_.push_back(shift(kBulk, 5 * i + j - 1, n));
    }
  }
  code.generators_.push_back(shift(kLast, n - 2, n));
  for (size_t i = 0; i < blocks; i++) {
    code.logical_x_.push_back(shift(kLogicalX, 5 * i, n));
    code.logical_z_.push_back(shift(kLogicalZ, 5 * i, n));
  }
  code.canonical_ = true;
  code.index_terms();
  return code;
}

ConvolutionalCode ConvolutionalCode::from_parts(size_t blocks, std::vector<Pauli> generators,
                                                std::vector<Pauli> logical_x,
                                                std::vector<Pauli> logical_z) {
  if (generators.empty()) {
    throw std::invalid_argument("code needs at least one generator");
  }
  size_t n = generators.front().num_qubits();
  auto check = [n](const std::vector<Pauli>& ops, const char* what) {
    for (const auto& p : ops) {
      if (p.num_qubits() != n) {
        throw DimensionError(std::string(what) + " operator '" + p.str() + "' has " +
                             std::to_string(p.num_qubits()) + " qubits, expected " +
                             std::to_string(n));
      }
    }
  };
  check(generators, "generator");
  check(logical_x, "logical_x");
  check(logical_z, "logical_z");

  ConvolutionalCode code;
  code.blocks_ = blocks;
  code.num_qubits_ = n;
  code.generators_ = std::move(generators);
  code.logical_x_ = std::move(logical_x);
  code.logical_z_ = std::move(logical_z);
  code.index_terms();
  if (blocks >= 1 && n == 5 * blocks + 2) {
    ConvolutionalCode ref = build(blocks);
    code.canonical_ = ref.generators_ == code.generators_ && ref.logical_x_ == code.logical_x_ &&
                      ref.logical_z_ == code.logical_z_;
  }
  return code;
}

void ConvolutionalCode::index_terms() {
  generator_terms_.clear();
  logical_x_terms_.clear();
  logical_z_terms_.clear();
  for (const auto& g : generators_) generator_terms_.push_back(terms_of(g));
  for (const auto& p : logical_x_) logical_x_terms_.push_back(terms_of(p));
  for (const auto& p : logical_z_) logical_z_terms_.push_back(terms_of(p));
}

std::vector<size_t> ConvolutionalCode::info_positions() const {
  std::vector<size_t> out;
  for (size_t i = 1; i <= blocks_; i++) out.push_back(5 * i + 1);
  return out;
}

Syndrome Syndrome::from_string(std::string_view text) {
  Syndrome s(text.size());
  for (size_t k = 0; k < text.size(); k++) {
    if (text[k] == '1') {
      s.set(k, true);
    } else if (text[k] != '0') {
      throw std::invalid_argument("syndrome bit " + std::to_string(k + 1) + " is '" +
                                  std::string(1, text[k]) + "', expected 0 or 1");
    }
  }
  return s;
}

bool symplectic_product(const Pauli& p, const std::vector<LocalTerm>& terms) {
  bool acc = false;
  const auto& xs = p.x_bits();
  const auto& zs = p.z_bits();
  for (const auto& t : terms) {
    uint8_t a = static_cast<uint8_t>(xs.get(t.qubit0) | (zs.get(t.qubit0) << 1));
    acc ^= anticommutes(a, t.code);
  }
  return acc;
}

Syndrome syndrome_of(const ConvolutionalCode& code, const Pauli& error) {
  require_qubits(code, error, "syndrome_of");
  Syndrome s(code.num_generators());
  for (size_t k = 0; k < code.num_generators(); k++) {
    if (symplectic_product(error, code.generator_terms(k))) s.set(k, true);
  }
  return s;
}

SymplecticSpan::SymplecticSpan(size_t num_qubits, const std::vector<Pauli>& rows)
    : num_qubits_(num_qubits) {
  for (const auto& p : rows) {
    if (p.num_qubits() != num_qubits_) {
      throw DimensionError("SymplecticSpan: row has wrong qubit count");
    }
    BitVector v(2 * num_qubits_);
    for (size_t q = 0; q < num_qubits_; q++) {
      if (p.x_bits().get(q)) v.set(q, true);
      if (p.z_bits().get(q)) v.set(num_qubits_ + q, true);
    }
    v = reduce(std::move(v));
    if (v.none()) continue;
    size_t pivot = 0;
    while (!v.get(pivot)) pivot++;
    for (auto& b : basis_) {
      if (b.get(pivot)) b ^= v;
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(pivot);
  }
}

BitVector SymplecticSpan::reduce(BitVector v) const {
  // Every basis row is zero on every pivot but its own.
  for (size_t k = 0; k < basis_.size(); k++) {
    if (v.get(pivots_[k])) v ^= basis_[k];
  }
  return v;
}

bool SymplecticSpan::contains(const Pauli& p) const {
  if (p.num_qubits() != num_qubits_) {
    throw DimensionError("SymplecticSpan::contains: wrong qubit count");
  }
  BitVector v(2 * num_qubits_);
  for (size_t q = 0; q < num_qubits_; q++) {
    if (p.x_bits().get(q)) v.set(q, true);
    if (p.z_bits().get(q)) v.set(num_qubits_ + q, true);
  }
  return reduce(std::move(v)).none();
}

bool in_stabilizer(const ConvolutionalCode& code, const Pauli& p) {
  require_qubits(code, p, "in_stabilizer");
  return SymplecticSpan(code.num_qubits(), code.generators()).contains(p);
}

BitVector logical_action(const ConvolutionalCode& code, const Pauli& p) {
  require_qubits(code, p, "logical_action");
  for (size_t k = 0; k < code.num_generators(); k++) {
    if (symplectic_product(p, code.generator_terms(k))) {
      throw PreconditionError("logical_action: operator has nonzero syndrome (generator " +
                              std::to_string(k) + ")");
    }
  }
  size_t num_logical = code.logical_x().size();
  BitVector out(2 * num_logical);
  for (size_t i = 0; i < num_logical; i++) {
    out.set(2 * i, symplectic_product(p, code.logical_x_terms(i)));
    out.set(2 * i + 1, symplectic_product(p, code.logical_z_terms(i)));
  }
  return out;
}

bool VerifyReport::logical_conditions_hold() const {
  if (membership.size() != num_logical) return false;
  for (const auto& m : membership) {
    if (!m.ok()) return false;
  }
  for (const auto& p : pairs) {
    if (!p.ok()) return false;
  }
  return true;
}

bool VerifyReport::all_passed() const {
  return generator_commutation && generators_independent() && logical_conditions_hold() &&
         encoded_dimension_exponent == static_cast<int64_t>(num_logical);
}

VerifyReport verify_code(const ConvolutionalCode& code) {
  constexpr size_t kMaxFailures = 20;
  VerifyReport report;
  auto fail = [&](std::string msg) {
    if (report.failures.size() < kMaxFailures) report.failures.push_back(std::move(msg));
  };

  const auto& gens = code.generators();
  report.num_generators = gens.size();
  report.generator_commutation = true;
  for (size_t a = 0; a < gens.size(); a++) {
    for (size_t b = a + 1; b < gens.size(); b++) {
      if (!supports_overlap(code.generator_terms(a), code.generator_terms(b))) continue;
      if (symplectic_product(gens[a], code.generator_terms(b))) {
        report.generator_commutation = false;
        fail("generators " + std::to_string(a) + " and " + std::to_string(b) + " anticommute");
      }
    }
  }

  SymplecticSpan span(code.num_qubits(), gens);
  report.generator_rank = span.rank();
  report.encoded_dimension_exponent =
      static_cast<int64_t>(code.num_qubits()) - static_cast<int64_t>(span.rank());
  if (!report.generators_independent()) {
    fail("generator rank " + std::to_string(span.rank()) + " < " + std::to_string(gens.size()));
  }

  const auto& xs = code.logical_x();
  const auto& zs = code.logical_z();
  if (xs.size() != zs.size()) {
    fail("logical_x and logical_z counts differ");
  }
  report.num_logical = std::min(xs.size(), zs.size());
  for (size_t i = 0; i < report.num_logical; i++) {
    LogicalMembershipCheck m{i + 1, syndrome_of(code, xs[i]).is_zero(),
                             syndrome_of(code, zs[i]).is_zero(), !span.contains(xs[i]),
                             !span.contains(zs[i])};
    if (!m.ok()) fail("logical " + std::to_string(i + 1) + " is not in N(S) - S");
    report.membership.push_back(m);
  }
  for (size_t i = 0; i < report.num_logical; i++) {
    for (size_t j = i; j < report.num_logical; j++) {
      LogicalPairCheck c{i + 1, j + 1, !symplectic_product(xs[i], xs[j]),
                         !symplectic_product(zs[i], zs[j]), false};
      if (i == j) {
        c.xz_relation = symplectic_product(xs[i], zs[i]);
      } else {
        c.xz_relation = !symplectic_product(xs[i], zs[j]) && !symplectic_product(xs[j], zs[i]);
      }
      if (!c.ok()) {
        fail("logical pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             ") violates commutation relations");
      }
      report.pairs.push_back(c);
    }
  }
  if (report.encoded_dimension_exponent != static_cast<int64_t>(report.num_logical)) {
    fail("encoded dimension exponent " + std::to_string(report.encoded_dimension_exponent) +
         " != " + std::to_string(report.num_logical) + " logical qubits");
  }
  return report;
}

bool trellis_locality_holds(const ConvolutionalCode& code) {
  size_t blocks = code.blocks();
  if (code.num_generators() != 4 * blocks + 2) return false;
  for (size_t i = 0; i < blocks; i++) {
    size_t boundary = 5 * i + 2;  // last qubit of the stage-i pair, 1-based
    for (size_t j = 1; j <= 4; j++) {
      for (const auto& t : code.generator_terms(4 * i + j)) {
        size_t q = t.qubit0 + 1;
        if (q <= boundary && q < 5 * i + 1) return false;
        if (q > 5 * i + 7) return false;
      }
    }
  }
  return true;
}

std::optional<size_t> min_logical_weight_probe(const ConvolutionalCode& code, size_t max_weight) {
  size_t n = code.num_qubits();
  for (size_t w = 1; w <= std::min(max_weight, n); w++) {
    std::vector<size_t> support(w);
    std::optional<size_t> found;
    // Every w-subset of qubits, then every assignment of X/Z/Y on it.
    std::function<bool(size_t, size_t)> choose = [&](size_t slot, size_t first) -> bool {
      if (slot == w) {
        size_t total = 1;
        for (size_t k = 0; k < w; k++) total *= 3;
        for (size_t assign = 0; assign < total; assign++) {
          Pauli p = Pauli::identity(n);
          size_t a = assign;
          for (size_t k = 0; k < w; k++) {
            p.set(support[k] + 1, static_cast<SingleQubitPauli>(a % 3 + 1));
            a /= 3;
          }
          if (!syndrome_of(code, p).is_zero()) continue;
          if (logical_action(code, p).any()) return true;
        }
        return false;
      }
      for (size_t q = first; q + (w - slot) <= n; q++) {
        support[slot] = q;
        if (choose(slot + 1, q + 1)) return true;
      }
      return false;
    };
    if (choose(0, 0)) return w;
  }
  return std::nullopt;
}

std::string code_to_json(const ConvolutionalCode& code) {
  nlohmann::ordered_json j;
  j["blocks"] = code.blocks();
  j["qubits"] = code.num_qubits();
  auto strings = [](const std::vector<Pauli>& ops) {
    std::vector<std::string> out;
    for (const auto& p : ops) out.push_back(p.str());
    return out;
  };
  j["generators"] = strings(code.generators());
  j["logical_x"] = strings(code.logical_x());
  j["logical_z"] = strings(code.logical_z());
  j["info_positions"] = code.info_positions();
  return j.dump(2) + "\n";
}

ConvolutionalCode code_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("code description: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("code description: expected a JSON object");
  static const char* kKeys[] = {"blocks", "qubits", "generators", "logical_x", "logical_z",
                                "info_positions"};
  for (const auto& item : j.items()) {
    if (std::find_if(std::begin(kKeys), std::end(kKeys),
                     [&](const char* k) { return item.key() == k; }) == std::end(kKeys)) {
      throw std::invalid_argument("code description: unknown key '" + item.key() + "'");
    }
  }
  for (const char* required : {"blocks", "generators", "logical_x", "logical_z"}) {
    if (!j.contains(required)) {
      throw std::invalid_argument(std::string("code description: missing key '") + required +
                                  "'");
    }
  }
  auto paulis = [&](const char* key) {
    std::vector<Pauli> out;
    if (!j[key].is_array()) {
      throw std::invalid_argument(std::string("code description: '") + key +
                                  "' must be an array");
    }
    for (const auto& s : j[key]) {
      if (!s.is_string()) {
        throw std::invalid_argument(std::string("code description: '") + key +
                                    "' entries must be strings");
      }
      out.push_back(Pauli::from_string(s.get<std::string>()));
    }
    return out;
  };
  if (!j["blocks"].is_number_unsigned()) {
    throw std::invalid_argument("code description: 'blocks' must be a nonnegative integer");
  }
  auto code = ConvolutionalCode::from_parts(j["blocks"].get<size_t>(), paulis("generators"),
                                            paulis("logical_x"), paulis("logical_z"));
  if (j.contains("qubits") && j["qubits"] != code.num_qubits()) {
    throw std::invalid_argument("code description: 'qubits' disagrees with operator length");
  }
  return code;
}

}  // namespace qconv
