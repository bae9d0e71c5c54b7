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


#include "qconv/decoder.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace qconv {

using Metric = FixedPointLikelihoods::Metric;
constexpr Metric kDead = FixedPointLikelihoods::kDead;

FixedPointLikelihoods::FixedPointLikelihoods(const ChannelSchedule& schedule) {
  table_.resize(schedule.num_qubits());
  // Worst case |sum| must stay inside int64 with room for one more addition.
  long double budget = 0;
  for (size_t q = 0; q < schedule.num_qubits(); q++) {
    Metric worst = 0;
    for (uint8_t c = 0; c < 4; c++) {
      double p = schedule.at(q + 1).of(static_cast<SingleQubitPauli>(c));
      if (p <= 0.0) {
        table_[q][c] = kDead;
      } else {
        table_[q][c] = std::llround(std::log(p) * kScale);
        worst = std::min(worst, table_[q][c]);
      }
    }
    budget += -static_cast<long double>(worst);
  }
  if (budget > 0x1.0p62L) {
    throw std::overflow_error("channel log-likelihoods too extreme for fixed-point metrics");
  }
}

namespace {

constexpr uint8_t kBulk[4] = {2, 1, 1, 2};  // Z X X Z

// Tie order: the error string read from the last qubit backwards, I < X < Z < Y.
// Within a window, the middle triple outranks the earlier pair.
constexpr uint8_t pair_rank(uint8_t j) { return static_cast<uint8_t>(4 * pair_second(j) + pair_first(j)); }
constexpr uint8_t middle_rank(uint8_t m) {
  return static_cast<uint8_t>(16 * (m & 3U) + 4 * ((m >> 2) & 3U) + (m >> 4));
}

struct Buckets {
  // [signature][k] -> packed 64*j + m, ordered by tie rank.
  std::array<std::array<std::vector<uint16_t>, 16>, 16> entries;
  // Pair states ordered by tie rank.
  std::array<uint8_t, 16> pairs_by_rank;
};

const Buckets& buckets() {
  static const Buckets table = [] {
    Buckets b;
    for (uint8_t j = 0; j < 16; j++) {
      for (uint8_t m = 0; m < 64; m++) {
        for (uint8_t k = 0; k < 16; k++) {
          b.entries[window_signature(j, m, k)][k].push_back(static_cast<uint16_t>(64 * j + m));
        }
      }
    }
    for (auto& row : b.entries) {
      for (auto& list : row) {
        std::sort(list.begin(), list.end(), [](uint16_t x, uint16_t y) {
          auto rank = [](uint16_t v) { return 16 * middle_rank(v & 63U) + pair_rank(v >> 6); };
          return rank(x) < rank(y);
        });
      }
    }
    for (uint8_t j = 0; j < 16; j++) b.pairs_by_rank[pair_rank(j)] = j;
    return b;
  }();
  return table;
}

std::array<uint8_t, 7> window_codes(uint8_t j, uint8_t m, uint8_t k) {
  return {pair_first(j), pair_second(j), static_cast<uint8_t>(m >> 4),
          static_cast<uint8_t>((m >> 2) & 3U), static_cast<uint8_t>(m & 3U), pair_first(k),
          pair_second(k)};
}

Metric pair_metric(const FixedPointLikelihoods& lik, size_t first0, uint8_t j) {
  return FixedPointLikelihoods::add(lik.at(first0, pair_first(j)), lik.at(first0 + 1, pair_second(j)));
}

Metric middle_metric(const FixedPointLikelihoods& lik, size_t first0, uint8_t m) {
  return FixedPointLikelihoods::add(
      FixedPointLikelihoods::add(lik.at(first0, m >> 4), lik.at(first0 + 1, (m >> 2) & 3U)),
      lik.at(first0 + 2, m & 3U));
}

// Running argmax honoring the tie mode: ascending candidate order plus strict
// improvement gives the smallest index; random mode is reservoir sampling.
struct Chooser {
  TieMode mode;
  Rng* rng;
  Metric best = kDead;
  uint32_t choice = 0;
  uint32_t count = 0;

  void offer(Metric v, uint32_t candidate) {
    if (v == kDead) return;
    if (count == 0 || v > best) {
      best = v;
      choice = candidate;
      count = 1;
    } else if (v == best) {
      count++;
      if (mode == TieMode::Random && rng->below(count) == 0) choice = candidate;
    }
  }
};

void set_code(Pauli& e, size_t qubit0, uint8_t code) {
  if (code != 0) e.set(qubit0 + 1, static_cast<SingleQubitPauli>(code));
}

}  // namespace

uint8_t window_signature(uint8_t j, uint8_t m, uint8_t k) {
  auto w = window_codes(j, m, k);
  uint8_t sig = 0;
  for (uint8_t r = 0; r < 4; r++) {
    bool bit = false;
    for (uint8_t t = 0; t < 4; t++) bit ^= anticommutes(w[r + t], kBulk[t]);
    sig |= static_cast<uint8_t>(bit) << r;
  }
  return sig;
}

bool initial_pair_syndrome(uint8_t j) {
  return anticommutes(pair_first(j), 1) ^ anticommutes(pair_second(j), 2);
}

bool final_pair_syndrome(uint8_t k) {
  return anticommutes(pair_first(k), 2) ^ anticommutes(pair_second(k), 1);
}

size_t TrellisStage::live_count() const {
  return static_cast<size_t>(std::count_if(metrics.begin(), metrics.end(),
                                           [](Metric m) { return m != kDead; }));
}

ViterbiDecoder::ViterbiDecoder(const ConvolutionalCode& code, const ChannelSchedule& schedule)
    : blocks_(code.blocks()),
      num_qubits_(code.num_qubits()),
      schedule_(schedule),
      likelihoods_(schedule) {
  if (!code.is_canonical()) {
    throw std::invalid_argument("viterbi decoder needs the canonical code layout");
  }
  if (schedule.num_qubits() != code.num_qubits()) {
    throw DimensionError("viterbi decoder: schedule has " + std::to_string(schedule.num_qubits()) +
                         " qubits, code has " + std::to_string(code.num_qubits()));
  }
}

void ViterbiDecoder::check_syndrome(const Syndrome& syn) const {
  if (syn.size() != 4 * blocks_ + 2) {
    throw DimensionError("syndrome has " + std::to_string(syn.size()) + " bits, expected " +
                         std::to_string(4 * blocks_ + 2));
  }
}

Trellis ViterbiDecoder::forward(const Syndrome& syn, const DecodeOptions& options) const {
  check_syndrome(syn);
  Rng rng(options.seed);
  const auto& table = buckets();
  Trellis trellis;
  trellis.stages.resize(blocks_ + 1);

  auto& first = trellis.stages[0];
  for (uint8_t j = 0; j < 16; j++) {
    first.metrics[j] = initial_pair_syndrome(j) == syn[0] ? pair_metric(likelihoods_, 0, j) : kDead;
  }

  std::array<Metric, 64> mids;
  std::array<Metric, 16> pairs;
  for (size_t i = 0; i < blocks_; i++) {
    const auto& prev = trellis.stages[i];
    auto& next = trellis.stages[i + 1];
    size_t base = 5 * i;  // 0-based index of qubit 5i+1
    uint8_t sig = 0;
    for (uint8_t r = 0; r < 4; r++) sig |= static_cast<uint8_t>(syn[4 * i + 1 + r]) << r;
    for (uint8_t m = 0; m < 64; m++) mids[m] = middle_metric(likelihoods_, base + 2, m);
    for (uint8_t k = 0; k < 16; k++) pairs[k] = pair_metric(likelihoods_, base + 5, k);

    for (uint8_t k = 0; k < 16; k++) {
      next.metrics[k] = kDead;
      if (pairs[k] == kDead) continue;
      Chooser chooser{options.tie_mode, &rng};
      for (uint16_t packed : table.entries[sig][k]) {
        Metric mj = prev.metrics[packed >> 6];
        Metric mm = mids[packed & 63U];
        if (mj == kDead || mm == kDead) continue;
        chooser.offer(mj + mm, packed);
      }
      if (chooser.count == 0) continue;
      next.metrics[k] = chooser.best + pairs[k];
      next.backpointer[k] = static_cast<uint16_t>(chooser.choice);
      next.tie[k] = chooser.count > 1;
    }
  }
  return trellis;
}

DecodeResult ViterbiDecoder::decode(const Syndrome& syn, const DecodeOptions& options) const {
  Trellis trellis = forward(syn, options);
  Rng rng(derive_seed(options.seed, 1));
  const auto& last = trellis.stages[blocks_];
  bool s_inf = syn[syn.size() - 1];
  Chooser chooser{options.tie_mode, &rng};
  for (uint8_t k : buckets().pairs_by_rank) {
    if (final_pair_syndrome(k) == s_inf) chooser.offer(last.metrics[k], k);
  }
  if (chooser.count == 0) {
    throw InfeasibleSyndrome("no error with positive probability has syndrome " + syn.str());
  }

  DecodeResult result;
  result.error = Pauli::identity(num_qubits_);
  result.tie_broken = chooser.count > 1;
  uint8_t state = static_cast<uint8_t>(chooser.choice);
  for (size_t t = blocks_; t > 0; t--) {
    size_t base = 5 * t;  // 0-based index of qubit 5t+1
    set_code(result.error, base, pair_first(state));
    set_code(result.error, base + 1, pair_second(state));
    const auto& stage = trellis.stages[t];
    result.tie_broken |= stage.tie[state];
    uint16_t packed = stage.backpointer[state];
    uint8_t m = packed & 63U;
    set_code(result.error, base - 3, m >> 4);
    set_code(result.error, base - 2, (m >> 2) & 3U);
    set_code(result.error, base - 1, m & 3U);
    state = static_cast<uint8_t>(packed >> 6);
  }
  set_code(result.error, 0, pair_first(state));
  set_code(result.error, 1, pair_second(state));
  result.log_likelihood = log_likelihood(schedule_, result.error);
  return result;
}

std::vector<size_t> ViterbiDecoder::survivor_merge_lags(const Syndrome& syn) const {
  Trellis trellis = forward(syn);
  std::vector<size_t> lags(blocks_ + 1, 0);
  for (size_t t = 0; t <= blocks_; t++) {
    uint16_t live = 0;
    for (uint8_t k = 0; k < 16; k++) {
      if (trellis.stages[t].metrics[k] != kDead) live |= 1U << k;
    }
    size_t u = t;
    while (std::popcount(live) > 1 && u > 0) {
      uint16_t prev = 0;
      for (uint8_t k = 0; k < 16; k++) {
        if (live & (1U << k)) prev |= 1U << (trellis.stages[u].backpointer[k] >> 6);
      }
      live = prev;
      u--;
    }
    lags[t] = std::popcount(live) > 1 ? t + 1 : t - u;
  }
  return lags;
}

DecodeResult viterbi_decode(const ConvolutionalCode& code, const ChannelSchedule& schedule,
                            const Syndrome& syn, const DecodeOptions& options) {
  return ViterbiDecoder(code, schedule).decode(syn, options);
}

size_t transition_live_count(const ConvolutionalCode& code, const ChannelSchedule& schedule,
                             size_t stage, uint8_t four_syndrome_bits) {
  if (stage >= code.blocks()) {
    throw std::out_of_range("transition stage " + std::to_string(stage) + " outside 0.." +
                            std::to_string(code.blocks() - 1));
  }
  if (schedule.num_qubits() != code.num_qubits()) throw DimensionError("schedule/code mismatch");
  size_t base = 5 * stage;
  size_t count = 0;
  for (uint8_t j = 0; j < 16; j++) {
    for (uint8_t m = 0; m < 64; m++) {
      for (uint8_t k = 0; k < 16; k++) {
        if (window_signature(j, m, k) != (four_syndrome_bits & 15U)) continue;
        auto w = window_codes(j, m, k);
        bool positive = true;
        for (size_t t = 0; t < 7 && positive; t++) {
          positive = schedule.at(base + t + 1).of(static_cast<SingleQubitPauli>(w[t])) > 0.0;
        }
        count += positive;
      }
    }
  }
  return count;
}

size_t initial_live_count(const ChannelSchedule& schedule, bool s0) {
  size_t count = 0;
  for (uint8_t j = 0; j < 16; j++) {
    if (initial_pair_syndrome(j) != s0) continue;
    count += schedule.at(1).of(static_cast<SingleQubitPauli>(pair_first(j))) > 0.0 &&
             schedule.at(2).of(static_cast<SingleQubitPauli>(pair_second(j))) > 0.0;
  }
  return count;
}

uint64_t tie_break_key(const std::vector<uint8_t>& codes) {
  if (codes.size() > 32) throw std::invalid_argument("tie_break_key: more than 32 qubits");
  uint64_t key = 0;
  for (size_t q = codes.size(); q-- > 0;) key = (key << 2) | codes[q];
  return key;
}

namespace {

void check_enumerable(const ConvolutionalCode& code, const ChannelSchedule& schedule) {
  if (code.num_qubits() > kMaxBruteForceQubits) {
    throw std::invalid_argument("brute force refuses " + std::to_string(code.num_qubits()) +
                                " qubits; the limit is " + std::to_string(kMaxBruteForceQubits));
  }
  if (code.num_qubits() != 5 * code.blocks() + 2) {
    throw std::invalid_argument("brute force needs the 5N+2 qubit layout");
  }
  if (schedule.num_qubits() != code.num_qubits()) throw DimensionError("schedule/code mismatch");
}

// Gray-code walk over all 4^n Paulis. visit(syndrome_mask, codes, error_bits)
// where error_bits holds x_q at bit q and z_q at bit n + q.
template <typename Visit>
void enumerate_paulis(const ConvolutionalCode& code, Visit&& visit) {
  size_t n = code.num_qubits();
  std::vector<uint64_t> columns(2 * n, 0);
  for (size_t b = 0; b < 2 * n; b++) {
    Pauli p = Pauli::single(n, b % n + 1, b < n ? SingleQubitPauli::X : SingleQubitPauli::Z);
    Syndrome s = syndrome_of(code, p);
    for (size_t k = 0; k < s.size(); k++) {
      if (s[k]) columns[b] |= uint64_t{1} << k;
    }
  }
  std::vector<uint8_t> codes(n, 0);
  uint64_t syn = 0;
  uint32_t bits = 0;
  visit(syn, codes, bits);
  uint64_t total = uint64_t{1} << (2 * n);
  for (uint64_t idx = 1; idx < total; idx++) {
    unsigned b = static_cast<unsigned>(std::countr_zero(idx));
    bits ^= uint32_t{1} << b;
    syn ^= columns[b];
    codes[b % n] ^= b < n ? 1U : 2U;
    visit(syn, codes, bits);
  }
}

Metric error_metric(const FixedPointLikelihoods& lik, const std::vector<uint8_t>& codes) {
  Metric total = 0;
  for (size_t q = 0; q < codes.size(); q++) {
    Metric v = lik.at(q, codes[q]);
    if (v == kDead) return kDead;
    total += v;
  }
  return total;
}

Pauli pauli_from_bits(uint32_t bits, size_t n) {
  Pauli e = Pauli::identity(n);
  for (size_t q = 0; q < n; q++) {
    e.x_bits().set(q, (bits >> q) & 1U);
    e.z_bits().set(q, (bits >> (n + q)) & 1U);
  }
  return e;
}

uint64_t syndrome_mask(const Syndrome& syn) {
  uint64_t mask = 0;
  for (size_t k = 0; k < syn.size(); k++) {
    if (syn[k]) mask |= uint64_t{1} << k;
  }
  return mask;
}

}  // namespace

DecodeResult brute_force_ml(const ConvolutionalCode& code, const ChannelSchedule& schedule,
                            const Syndrome& syn) {
  check_enumerable(code, schedule);
  if (syn.size() != code.num_generators()) {
    throw DimensionError("syndrome has " + std::to_string(syn.size()) + " bits, expected " +
                         std::to_string(code.num_generators()));
  }
  FixedPointLikelihoods lik(schedule);
  uint64_t target = syndrome_mask(syn);
  Metric best = kDead;
  uint64_t best_key = 0;
  uint32_t best_bits = 0;
  uint64_t count = 0;
  enumerate_paulis(code, [&](uint64_t s, const std::vector<uint8_t>& codes, uint32_t bits) {
    if (s != target) return;
    Metric v = error_metric(lik, codes);
    if (v == kDead) return;
    if (count == 0 || v > best) {
      best = v;
      best_key = tie_break_key(codes);
      best_bits = bits;
      count = 1;
    } else if (v == best) {
      count++;
      uint64_t key = tie_break_key(codes);
      if (key < best_key) {
        best_key = key;
        best_bits = bits;
      }
    }
  });
  if (count == 0) {
    throw InfeasibleSyndrome("no error with positive probability has syndrome " + syn.str());
  }
  DecodeResult result;
  result.error = pauli_from_bits(best_bits, code.num_qubits());
  result.log_likelihood = log_likelihood(schedule, result.error);
  result.tie_broken = count > 1;
  return result;
}

ExhaustiveDecoder::ExhaustiveDecoder(const ConvolutionalCode& code, const ChannelSchedule& schedule)
    : code_(code), schedule_(schedule) {
  check_enumerable(code, schedule);
  FixedPointLikelihoods lik(schedule);
  best_.assign(size_t{1} << code.num_generators(), Entry{});
  enumerate_paulis(code, [&](uint64_t s, const std::vector<uint8_t>& codes, uint32_t bits) {
    Metric v = error_metric(lik, codes);
    if (v == kDead) return;
    Entry& e = best_[s];
    if (e.count == 0 || v > e.metric) {
      e = {v, tie_break_key(codes), bits, 1};
    } else if (v == e.metric) {
      e.count++;
      uint64_t key = tie_break_key(codes);
      if (key < e.key) {
        e.key = key;
        e.error = bits;
      }
    }
  });
}

DecodeResult ExhaustiveDecoder::decode(const Syndrome& syn) const {
  if (syn.size() != code_.num_generators()) {
    throw DimensionError("syndrome has " + std::to_string(syn.size()) + " bits, expected " +
                         std::to_string(code_.num_generators()));
  }
  const Entry& e = best_[syndrome_mask(syn)];
  if (e.count == 0) {
    throw InfeasibleSyndrome("no error with positive probability has syndrome " + syn.str());
  }
  DecodeResult result;
  result.error = pauli_from_bits(e.error, code_.num_qubits());
  result.log_likelihood = log_likelihood(schedule_, result.error);
  result.tie_broken = e.count > 1;
  return result;
}

}  // namespace qconv
