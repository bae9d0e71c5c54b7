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


#ifndef QCONV_CHANNEL_H
#define QCONV_CHANNEL_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/pauli.h"

namespace qconv {

/// Error probabilities of one qubit, in file order (p_I, p_X, p_Y, p_Z).
struct QubitChannel {
  double p_i = 1.0;
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;

  double of(SingleQubitPauli p) const;
  bool operator==(const QubitChannel& other) const = default;
};

/// Independent per-qubit Pauli channel; position doubles as time for a
/// streamed code. Each quadruple is nonnegative and sums to 1 within 1e-12.
class ChannelSchedule {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit ChannelSchedule(std::vector<QubitChannel> qubits);

  size_t num_qubits() const { return qubits_.size(); }
  /// 1-based.
  const QubitChannel& at(size_t qubit) const { return qubits_[qubit - 1]; }
  const std::vector<QubitChannel>& qubits() const { return qubits_; }

  bool operator==(const ChannelSchedule& other) const = default;

 private:
  std::vector<QubitChannel> qubits_;
};

ChannelSchedule depolarizing(size_t n, double p);

uint64_t splitmix64(uint64_t x);
/// Seed of sub-stream `stream` of `master`: splitmix64(master ^ splitmix64(stream)).
uint64_t derive_seed(uint64_t master, uint64_t stream);

/// mt19937_64 with platform-independent conversions to doubles and ranges.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound), bound >= 1.
  uint64_t below(uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

Pauli sample_error(const ChannelSchedule& schedule, Rng& rng);
Pauli sample_error(const ChannelSchedule& schedule, uint64_t seed);

/// Sum of per-qubit log-probabilities; -infinity if any factor is zero.
double log_likelihood(const ChannelSchedule& schedule, const Pauli& error);

/// Channel config file contents, before the qubit count is known.
struct ChannelSpec {
  enum class Type { Depolarizing, Schedule };
  Type type = Type::Depolarizing;
  double p = 0.0;
  std::vector<QubitChannel> probs;
  std::string id;

  ChannelSchedule instantiate(size_t n) const;
  /// Short label for result tables: the p value or the schedule id.
  std::string label() const;
};

/// {"type":"depolarizing","p":...} or {"type":"schedule","probs":[[pI,pX,pY,pZ],...]},
/// with an optional "id". Unknown keys are rejected.
ChannelSpec parse_channel_spec(std::string_view json_text);
std::string channel_spec_to_json(const ChannelSpec& spec);
ChannelSpec schedule_spec(const ChannelSchedule& schedule, std::string id = "");

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

}  // namespace qconv

#endif  // QCONV_CHANNEL_H
