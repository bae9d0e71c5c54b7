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


#ifndef QCONV_CIRCUITS_H
#define QCONV_CIRCUITS_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/code.h"
#include "qconv/pauli.h"
#include "qconv/tableau.h"

namespace qconv {

/// Gates grouped into layers; gates inside a layer are meant to commute.
struct LayeredCircuit {
  size_t num_qubits = 0;
  std::vector<std::vector<CliffordGate>> layers;

  size_t num_layers() const { return layers.size(); }
  size_t num_gates() const;
  bool operator==(const LayeredCircuit& other) const = default;
};

/// Six-layer online encoder. Layer 1 puts H on every non-input qubit, layer 2
/// holds the inter-block CZs, layers 3..6 apply controlled pieces of the
/// generators block by block. Every gate spans at most three consecutive qubits.
LayeredCircuit build_encoding_circuit(size_t blocks);

/// Encoder with the layer order reversed (all gates are involutions).
LayeredCircuit build_decoding_circuit(size_t blocks);

LayeredCircuit reverse_layers(const LayeredCircuit& c);

/// True iff the two gates commute up to global phase.
bool gates_commute(const CliffordGate& a, const CliffordGate& b);

bool verify_layer_commutation(const LayeredCircuit& c);

/// Phase-free conjugation of e through layers from_layer .. end. from_layer
/// may equal num_layers() (nothing left to apply).
Pauli propagate_error(const LayeredCircuit& c, const Pauli& e, size_t from_layer);

/// Max weight after propagation over every single-qubit X/Y/Z error at every
/// qubit and every insertion point between layers.
size_t max_error_spread(const LayeredCircuit& c);

/// Max distance between qubits touched by one gate.
size_t max_gate_span(const LayeredCircuit& c);

void run_circuit(const LayeredCircuit& c, StabilizerTableau& t);

/// Input basis state: logical bit i at qubit 5i+1, zeros elsewhere.
std::vector<uint8_t> encoder_input_bits(const ConvolutionalCode& code,
                                        const std::vector<uint8_t>& logical_bits);

/// Runs the circuit on the input state for logical_bits and checks that the
/// output is stabilized by +M_k for all k and (-1)^{c_i} Zbar_i for all i.
bool check_encoder_contract(const ConvolutionalCode& code, const LayeredCircuit& encoder,
                            const std::vector<uint8_t>& logical_bits);

/// One gate per line ("H 3", "CX 3 5", "CZ 2 4"), blank line between layers.
std::string circuit_to_text(const LayeredCircuit& c);
LayeredCircuit circuit_from_text(std::string_view text, size_t num_qubits);

}  // namespace qconv

#endif  // QCONV_CIRCUITS_H
