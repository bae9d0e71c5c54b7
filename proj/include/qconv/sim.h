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


#ifndef QCONV_SIM_H
#define QCONV_SIM_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qconv/bit_vector.h"
#include "qconv/channel.h"
#include "qconv/code.h"
#include "qconv/decoder.h"
#include "qconv/pauli.h"

namespace qconv {

struct ResidualClass {
  enum class Kind { Success, LogicalError };
  Kind kind = Kind::Success;
  /// logical_action of the residual; all zero on success.
  BitVector action;

  bool success() const { return kind == Kind::Success; }
};

/// Throws PreconditionError if the two errors have different syndromes.
ResidualClass classify_residual(const ConvolutionalCode& code, const Pauli& sampled,
                                const Pauli& decoded);

struct TrialOutcome {
  Pauli sampled_error;
  Pauli decoded_error;
  ResidualClass residual;
  bool infeasible = false;
};

enum class DecoderKind { Viterbi, Exhaustive };

struct SimOptions {
  size_t trials = 1;
  uint64_t master_seed = 1;
  TieMode tie_mode = TieMode::Deterministic;
  size_t jobs = 1;
  DecoderKind decoder = DecoderKind::Viterbi;
};

struct SimStats {
  size_t blocks = 0;
  size_t qubits = 0;
  std::string channel_label;
  size_t trials = 0;
  size_t logical_errors = 0;
  size_t infeasible = 0;
  double rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  uint64_t master_seed = 0;
  double elapsed_s = 0.0;
};

struct Interval {
  double low;
  double high;
};

/// 95% Wilson score interval for k successes out of n >= 1.
Interval wilson_interval(size_t k, size_t n);

/// Trial t uses seed derive_seed(master_seed, t) for sampling and
/// derive_seed(that, 1) for random tie-breaking, so the split over workers
/// never changes the result.
uint64_t trial_seed(uint64_t master_seed, size_t trial);

TrialOutcome run_trial(const ConvolutionalCode& code, const ChannelSchedule& schedule,
                       const ViterbiDecoder& decoder, uint64_t seed, TieMode tie_mode);

SimStats run_trials(const ConvolutionalCode& code, const ChannelSchedule& schedule,
                    const SimOptions& options, const std::string& channel_label = "");

struct SweepSpec {
  std::vector<size_t> blocks;
  std::vector<ChannelSpec> channels;
  size_t trials = 1;
  uint64_t master_seed = 1;
  TieMode tie_mode = TieMode::Deterministic;
  size_t jobs = 1;
};

/// One row per (N, channel), N-major. Row r runs with master seed
/// derive_seed(spec.master_seed, r), which is the seed reported in the row.
std::vector<SimStats> sweep(const SweepSpec& spec);

/// Without `timing` the elapsed column holds NA so that reruns are byte-identical.
std::string stats_to_csv(const std::vector<SimStats>& rows, bool timing);
std::string stats_to_json(const std::vector<SimStats>& rows, bool timing);

}  // namespace qconv

#endif  // QCONV_SIM_H
