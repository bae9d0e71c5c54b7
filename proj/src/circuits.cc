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


#include "qconv/circuits.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qconv {

size_t LayeredCircuit::num_gates() const {
  size_t total = 0;
  for (const auto& layer : layers) total += layer.size();
  return total;
}

LayeredCircuit build_encoding_circuit(size_t blocks) {
  if (blocks < 1) throw std::domain_error("build_encoding_circuit: need at least one block");
  LayeredCircuit c;
  size_t n = 5 * blocks + 2;
  c.num_qubits = n;
  c.layers.resize(6);

  for (size_t q = 1; q <= n; q++) {
    if (q % 5 == 1 && q > 1) continue;  // input qubits 5i+1
    c.layers[0].push_back(CliffordGate::h(q));
  }
  for (size_t b = 1; b < blocks; b++) c.layers[1].push_back(CliffordGate::cz(5 * b, 5 * b + 2));
  c.layers[1].push_back(CliffordGate::cz(n - 1, n));

  for (size_t b = 0; b < blocks; b++) {
    size_t base = 5 * b;
    c.layers[2].push_back(CliffordGate::cz(base + 5, base + 7));
    c.layers[2].push_back(CliffordGate::cx(base + 5, base + 6));
    c.layers[3].push_back(CliffordGate::cz(base + 4, base + 6));
    c.layers[3].push_back(CliffordGate::cx(base + 4, base + 5));
    c.layers[4].push_back(CliffordGate::cz(base + 3, base + 5));
    c.layers[4].push_back(CliffordGate::cx(base + 3, base + 4));
    c.layers[5].push_back(CliffordGate::cz(base + 2, base + 4));
    c.layers[5].push_back(CliffordGate::cz(base + 2, base + 1));
    c.layers[5].push_back(CliffordGate::cx(base + 2, base + 3));
  }
  return c;
}

LayeredCircuit reverse_layers(const LayeredCircuit& c) {
  LayeredCircuit out = c;
  std::reverse(out.layers.begin(), out.layers.end());
  return out;
}

LayeredCircuit build_decoding_circuit(size_t blocks) {
  return reverse_layers(build_encoding_circuit(blocks));
}

namespace {

std::vector<size_t> gate_qubits(const CliffordGate& g) {
  if (g.is_two_qubit()) return {g.first, g.second};
  return {g.first};
}

CliffordGate relabel(const CliffordGate& g, const std::vector<size_t>& qubits) {
  auto local = [&](size_t q) {
    return static_cast<size_t>(std::find(qubits.begin(), qubits.end(), q) - qubits.begin()) + 1;
  };
  CliffordGate out = g;
  out.first = local(g.first);
  if (g.is_two_qubit()) out.second = local(g.second);
  return out;
}

}  // namespace

bool gates_commute(const CliffordGate& a, const CliffordGate& b) {
  std::vector<size_t> qa = gate_qubits(a), qb = gate_qubits(b);
  std::set<size_t> all(qa.begin(), qa.end());
  bool overlap = false;
  for (size_t q : qb) overlap |= !all.insert(q).second;
  if (!overlap) return true;

  std::vector<size_t> qubits(all.begin(), all.end());
  size_t m = qubits.size();
  CliffordGate la = relabel(a, qubits), lb = relabel(b, qubits);
  for (size_t q = 1; q <= m; q++) {
    for (auto kind : {SingleQubitPauli::X, SingleQubitPauli::Z}) {
      SignedPauli ab{Pauli::single(m, q, kind), false};
      SignedPauli ba = ab;
      conjugate(ab, la);
      conjugate(ab, lb);
      conjugate(ba, lb);
      conjugate(ba, la);
      if (!(ab == ba)) return false;
    }
  }
  return true;
}

bool verify_layer_commutation(const LayeredCircuit& c) {
  for (const auto& layer : c.layers) {
    for (size_t i = 0; i < layer.size(); i++) {
      for (size_t j = i + 1; j < layer.size(); j++) {
        if (!gates_commute(layer[i], layer[j])) return false;
      }
    }
  }
  return true;
}

Pauli propagate_error(const LayeredCircuit& c, const Pauli& e, size_t from_layer) {
  if (e.num_qubits() != c.num_qubits) {
    throw DimensionError("propagate_error: error has " + std::to_string(e.num_qubits()) +
                         " qubits, circuit has " + std::to_string(c.num_qubits));
  }
  if (from_layer > c.layers.size()) {
    throw std::out_of_range("propagate_error: layer " + std::to_string(from_layer) +
                            " beyond " + std::to_string(c.layers.size()));
  }
  SignedPauli p{e, false};
  for (size_t l = from_layer; l < c.layers.size(); l++) {
    for (const auto& g : c.layers[l]) conjugate(p, g);
  }
  return p.pauli;
}

size_t max_error_spread(const LayeredCircuit& c) {
  size_t worst = 0;
  for (size_t q = 1; q <= c.num_qubits; q++) {
    for (auto kind : {SingleQubitPauli::X, SingleQubitPauli::Y, SingleQubitPauli::Z}) {
      Pauli e = Pauli::single(c.num_qubits, q, kind);
      for (size_t l = 0; l <= c.layers.size(); l++) {
        worst = std::max(worst, weight(propagate_error(c, e, l)));
      }
    }
  }
  return worst;
}

size_t max_gate_span(const LayeredCircuit& c) {
  size_t span = 0;
  for (const auto& layer : c.layers) {
    for (const auto& g : layer) {
      if (g.is_two_qubit()) {
        span = std::max(span, g.first > g.second ? g.first - g.second : g.second - g.first);
      }
    }
  }
  return span;
}

void run_circuit(const LayeredCircuit& c, StabilizerTableau& t) {
  if (t.num_qubits() != c.num_qubits) throw DimensionError("run_circuit: qubit count mismatch");
  for (const auto& layer : c.layers) {
    for (const auto& g : layer) t.apply(g);
  }
}

std::vector<uint8_t> encoder_input_bits(const ConvolutionalCode& code,
                                        const std::vector<uint8_t>& logical_bits) {
  auto positions = code.info_positions();
  if (logical_bits.size() != positions.size()) {
    throw std::invalid_argument("encoder_input_bits: " + std::to_string(logical_bits.size()) +
                                " bits for " + std::to_string(positions.size()) +
                                " logical qubits");
  }
  std::vector<uint8_t> bits(code.num_qubits(), 0);
  for (size_t i = 0; i < positions.size(); i++) bits[positions[i] - 1] = logical_bits[i] ? 1 : 0;
  return bits;
}

bool check_encoder_contract(const ConvolutionalCode& code, const LayeredCircuit& encoder,
                            const std::vector<uint8_t>& logical_bits) {
  auto t = tableau_from_bits(encoder_input_bits(code, logical_bits), code.num_qubits());
  run_circuit(encoder, t);
  for (const auto& g : code.generators()) {
    if (!t.stabilizes({g, false})) return false;
  }
  for (size_t i = 0; i < code.logical_z().size(); i++) {
    if (!t.stabilizes({code.logical_z()[i], logical_bits[i] != 0})) return false;
  }
  return true;
}

std::string circuit_to_text(const LayeredCircuit& c) {
  std::ostringstream out;
  for (size_t l = 0; l < c.layers.size(); l++) {
    if (l > 0) out << '\n';
    for (const auto& g : c.layers[l]) {
      switch (g.kind) {
        case GateKind::H:
          out << "H " << g.first;
          break;
        case GateKind::X:
          out << "X " << g.first;
          break;
        case GateKind::Z:
          out << "Z " << g.first;
          break;
        case GateKind::CX:
          out << "CX " << g.first << ' ' << g.second;
          break;
        case GateKind::CZ:
          out << "CZ " << g.first << ' ' << g.second;
          break;
      }
      out << '\n';
    }
  }
  return out.str();
}

LayeredCircuit circuit_from_text(std::string_view text, size_t num_qubits) {
  LayeredCircuit c;
  c.num_qubits = num_qubits;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  bool open_layer = false;
  while (std::getline(in, line)) {
    line_no++;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      open_layer = false;
      continue;
    }
    std::istringstream fields(line);
    std::string name;
    fields >> name;
    CliffordGate g{GateKind::H, 0, 0};
    if (name == "H") {
      g.kind = GateKind::H;
    } else if (name == "X") {
      g.kind = GateKind::X;
    } else if (name == "Z") {
      g.kind = GateKind::Z;
    } else if (name == "CX") {
      g.kind = GateKind::CX;
    } else if (name == "CZ") {
      g.kind = GateKind::CZ;
    } else {
      throw std::invalid_argument("circuit line " + std::to_string(line_no) +
                                  ": unknown gate '" + name + "'");
    }
    if (!(fields >> g.first) || (g.is_two_qubit() && !(fields >> g.second))) {
      throw std::invalid_argument("circuit line " + std::to_string(line_no) +
                                  ": missing qubit index");
    }
    std::string extra;
    if (fields >> extra) {
      throw std::invalid_argument("circuit line " + std::to_string(line_no) +
                                  ": unexpected token '" + extra + "'");
    }
    validate_gate(g, num_qubits);
    if (!open_layer) {
      c.layers.emplace_back();
      open_layer = true;
    }
    c.layers.back().push_back(g);
  }
  return c;
}

}  // namespace qconv
