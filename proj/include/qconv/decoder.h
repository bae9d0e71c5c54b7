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


#ifndef QCONV_DECODER_H
#define QCONV_DECODER_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qconv/channel.h"
#include "qconv/code.h"
#include "qconv/pauli.h"

namespace qconv {

class InfeasibleSyndrome : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TieMode { Deterministic, Random };

struct DecodeOptions {
  TieMode tie_mode = TieMode::Deterministic;
  uint64_t seed = 0;  // only read in Random mode
};

struct DecodeResult {
  Pauli error;
  double log_likelihood = 0.0;
  bool tie_broken = false;
};

/// Per-qubit log-probabilities as fixed-point integers (units of 2^-40).
/// Integer sums are exact, so equal-likelihood errors compare equal no
/// matter in which order their terms were added.
class FixedPointLikelihoods {
 public:
  using Metric = int64_t;
  static constexpr Metric kDead = std::numeric_limits<Metric>::min();
  static constexpr double kScale = 0x1.0p40;

  explicit FixedPointLikelihoods(const ChannelSchedule& schedule);

  /// qubit0 is 0-based; code is the 2-bit SingleQubitPauli code.
  Metric at(size_t qubit0, uint8_t code) const { return table_[qubit0][code]; }
  size_t num_qubits() const { return table_.size(); }

  static Metric add(Metric a, Metric b) { return (a == kDead || b == kDead) ? kDead : a + b; }

 private:
  std::vector<std::array<Metric, 4>> table_;
};

/// Trellis state/window encodings. A pair state is 4*code(first) + code(second);
/// a middle triple is 16*c(5i+3) + 4*c(5i+4) + c(5i+5).
constexpr uint8_t pair_first(uint8_t j) { return j >> 2; }
constexpr uint8_t pair_second(uint8_t j) { return j & 3U; }

/// 4-bit syndrome signature of the window (pair j, middle m, pair k) against
/// the four ZXXZ generators it covers; bit r belongs to M_{4i+1+r}.
uint8_t window_signature(uint8_t j, uint8_t m, uint8_t k);
bool initial_pair_syndrome(uint8_t j);  // against M_0 = XZ
bool final_pair_syndrome(uint8_t k);    // against M_inf = ZX

struct TrellisStage {
  std::array<FixedPointLikelihoods::Metric, 16> metrics{};
  /// 64*j + m of the chosen predecessor; unused at stage 0.
  std::array<uint16_t, 16> backpointer{};
  std::array<bool, 16> tie{};
  size_t live_count() const;
};

struct Trellis {
  std::vector<TrellisStage> stages;  // stages[0..N]
};

/// Reusable decoder for one code and one channel; decode() is thread-safe.
class ViterbiDecoder {
 public:
  ViterbiDecoder(const ConvolutionalCode& code, const ChannelSchedule& schedule);

  DecodeResult decode(const Syndrome& syn, const DecodeOptions& options = {}) const;
  Trellis forward(const Syndrome& syn, const DecodeOptions& options = {}) const;

  /// For each stage t, how many stages back all surviving candidates at t
  /// share one state; t + 1 when they never merge.
  std::vector<size_t> survivor_merge_lags(const Syndrome& syn) const;

  size_t blocks() const { return blocks_; }

 private:
  void check_syndrome(const Syndrome& syn) const;

  size_t blocks_;
  size_t num_qubits_;
  ChannelSchedule schedule_;
  FixedPointLikelihoods likelihoods_;
};

DecodeResult viterbi_decode(const ConvolutionalCode& code, const ChannelSchedule& schedule,
                            const Syndrome& syn, const DecodeOptions& options = {});

/// Number of windows (j, m, k) reproducing the four syndrome bits of
/// transition i whose every factor has positive probability.
size_t transition_live_count(const ConvolutionalCode& code, const ChannelSchedule& schedule,
                             size_t stage, uint8_t four_syndrome_bits);
size_t initial_live_count(const ChannelSchedule& schedule, bool s0);

/// Deterministic tie order shared by all decoders: smaller key wins. The key
/// reads the per-qubit codes (I=0, X=1, Z=2, Y=3) with the last qubit most
/// significant. At most 32 qubits.
uint64_t tie_break_key(const std::vector<uint8_t>& codes);

constexpr size_t kMaxBruteForceQubits = 12;

/// Exhaustive maximum-likelihood search over all 4^n Paulis (n <= 12).
DecodeResult brute_force_ml(const ConvolutionalCode& code, const ChannelSchedule& schedule,
                            const Syndrome& syn);

/// One exhaustive sweep storing the ML error for every syndrome.
class ExhaustiveDecoder {
 public:
  ExhaustiveDecoder(const ConvolutionalCode& code, const ChannelSchedule& schedule);
  /// Throws InfeasibleSyndrome when no positive-probability error matches.
  DecodeResult decode(const Syndrome& syn) const;

 private:
  struct Entry {
    FixedPointLikelihoods::Metric metric = FixedPointLikelihoods::kDead;
    uint64_t key = 0;
    uint32_t error = 0;
    uint32_t count = 0;
  };
  ConvolutionalCode code_;
  ChannelSchedule schedule_;
  std::vector<Entry> best_;
};

}  // namespace qconv

#endif  // QCONV_DECODER_H
