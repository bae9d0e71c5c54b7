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


#include "qconv/sim.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace qconv {

ResidualClass classify_residual(const ConvolutionalCode& code, const Pauli& sampled,
                                const Pauli& decoded) {
  if (sampled.num_qubits() != code.num_qubits() || decoded.num_qubits() != code.num_qubits()) {
    throw DimensionError("classify_residual: error length does not match the code");
  }
  Pauli residual = multiply(sampled, decoded);
  if (!syndrome_of(code, residual).is_zero()) {
    throw PreconditionError("classify_residual: decoded error has a different syndrome");
  }
  ResidualClass out;
  out.action = logical_action(code, residual);
  out.kind = out.action.any() ? ResidualClass::Kind::LogicalError : ResidualClass::Kind::Success;
  return out;
}

Interval wilson_interval(size_t k, size_t n) {
  if (n == 0) throw std::invalid_argument("wilson_interval: n must be positive");
  if (k > n) throw std::invalid_argument("wilson_interval: k exceeds n");
  constexpr double z = 1.959963984540054;
  double nn = static_cast<double>(n);
  double phat = static_cast<double>(k) / nn;
  double z2 = z * z;
  double denom = 1.0 + z2 / nn;
  double center = (phat + z2 / (2 * nn)) / denom;
  double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / denom;
  // Clamp so the interval always contains the point estimate despite rounding.
  return {std::clamp(std::min(center - half, phat), 0.0, 1.0),
          std::clamp(std::max(center + half, phat), 0.0, 1.0)};
}

uint64_t trial_seed(uint64_t master_seed, size_t trial) { return derive_seed(master_seed, trial); }

TrialOutcome run_trial(const ConvolutionalCode& code, const ChannelSchedule& schedule,
                       const ViterbiDecoder& decoder, uint64_t seed, TieMode tie_mode) {
  TrialOutcome out;
  out.sampled_error = sample_error(schedule, seed);
  Syndrome syn = syndrome_of(code, out.sampled_error);
  try {
    out.decoded_error = decoder.decode(syn, {tie_mode, derive_seed(seed, 1)}).error;
  } catch (const InfeasibleSyndrome&) {
    out.infeasible = true;
    return out;
  }
  out.residual = classify_residual(code, out.sampled_error, out.decoded_error);
  return out;
}

namespace {

struct Counts {
  size_t logical_errors = 0;
  size_t infeasible = 0;
};

}  // namespace

SimStats run_trials(const ConvolutionalCode& code, const ChannelSchedule& schedule,
                    const SimOptions& options, const std::string& channel_label) {
  if (options.trials == 0) throw std::invalid_argument("run_trials: trials must be at least 1");
  auto start = std::chrono::steady_clock::now();

  std::unique_ptr<ViterbiDecoder> viterbi;
  std::unique_ptr<ExhaustiveDecoder> exhaustive;
  if (options.decoder == DecoderKind::Viterbi) {
    viterbi = std::make_unique<ViterbiDecoder>(code, schedule);
  } else {
    if (options.tie_mode != TieMode::Deterministic) {
      throw std::invalid_argument("exhaustive decoder only supports deterministic ties");
    }
    exhaustive = std::make_unique<ExhaustiveDecoder>(code, schedule);
  }

  auto one = [&](size_t t, Counts& c) {
    uint64_t seed = trial_seed(options.master_seed, t);
    if (viterbi) {
      TrialOutcome o = run_trial(code, schedule, *viterbi, seed, options.tie_mode);
      c.infeasible += o.infeasible;
      c.logical_errors += !o.infeasible && !o.residual.success();
      return;
    }
    Pauli sampled = sample_error(schedule, seed);
    try {
      Pauli decoded = exhaustive->decode(syndrome_of(code, sampled)).error;
      c.logical_errors += !classify_residual(code, sampled, decoded).success();
    } catch (const InfeasibleSyndrome&) {
      c.infeasible++;
    }
  };

  size_t jobs = std::clamp<size_t>(options.jobs, 1, options.trials);
  std::vector<Counts> partial(jobs);
  if (jobs == 1) {
    for (size_t t = 0; t < options.trials; t++) one(t, partial[0]);
  } else {
    std::vector<std::thread> workers;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (size_t w = 0; w < jobs; w++) {
      workers.emplace_back([&, w] {
        try {
          for (size_t t = w; t < options.trials; t += jobs) one(t, partial[w]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : workers) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  SimStats stats;
  stats.blocks = code.blocks();
  stats.qubits = code.num_qubits();
  stats.channel_label = channel_label;
  stats.trials = options.trials;
  for (const auto& c : partial) {
    stats.logical_errors += c.logical_errors;
    stats.infeasible += c.infeasible;
  }
  stats.rate = static_cast<double>(stats.logical_errors) / static_cast<double>(stats.trials);
  Interval ci = wilson_interval(stats.logical_errors, stats.trials);
  stats.ci_low = ci.low;
  stats.ci_high = ci.high;
  stats.master_seed = options.master_seed;
  stats.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

std::vector<SimStats> sweep(const SweepSpec& spec) {
  std::vector<SimStats> rows;
  size_t row = 0;
  for (size_t blocks : spec.blocks) {
    ConvolutionalCode code = build_code(blocks);
    for (const auto& channel : spec.channels) {
      SimOptions options;
      options.trials = spec.trials;
      options.master_seed = derive_seed(spec.master_seed, row++);
      options.tie_mode = spec.tie_mode;
      options.jobs = spec.jobs;
      rows.push_back(run_trials(code, channel.instantiate(code.num_qubits()), options,
                                channel.label()));
    }
  }
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string stats_to_csv(const std::vector<SimStats>& rows, bool timing) {
  std::ostringstream out;
  out << "N,n,p_or_schedule_id,trials,logical_errors,rate,ci_low,ci_high,seed,elapsed_s\n";
  for (const auto& r : rows) {
    out << r.blocks << ',' << r.qubits << ',' << csv_field(r.channel_label) << ',' << r.trials
        << ',' << r.logical_errors << ',' << format_double(r.rate) << ','
        << format_double(r.ci_low) << ',' << format_double(r.ci_high) << ',' << r.master_seed
        << ',' << (timing ? format_double(r.elapsed_s) : std::string("NA")) << '\n';
  }
  return out.str();
}

std::string stats_to_json(const std::vector<SimStats>& rows, bool timing) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["N"] = r.blocks;
    j["n"] = r.qubits;
    j["p_or_schedule_id"] = r.channel_label;
    j["trials"] = r.trials;
    j["logical_errors"] = r.logical_errors;
    j["infeasible"] = r.infeasible;
    j["rate"] = r.rate;
    j["ci_low"] = r.ci_low;
    j["ci_high"] = r.ci_high;
    j["seed"] = r.master_seed;
    if (timing) {
      j["elapsed_s"] = r.elapsed_s;
    } else {
      j["elapsed_s"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace qconv
