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


#include "qconv/channel.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace qconv {

double QubitChannel::of(SingleQubitPauli p) const {
  switch (p) {
    case SingleQubitPauli::I:
      return p_i;
    case SingleQubitPauli::X:
      return p_x;
    case SingleQubitPauli::Y:
      return p_y;
    case SingleQubitPauli::Z:
      return p_z;
  }
  return 0.0;
}

ChannelSchedule::ChannelSchedule(std::vector<QubitChannel> qubits) : qubits_(std::move(qubits)) {
  for (size_t q = 0; q < qubits_.size(); q++) {
    const auto& c = qubits_[q];
    for (double v : {c.p_i, c.p_x, c.p_y, c.p_z}) {
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("channel: qubit " + std::to_string(q + 1) +
                                    " has a negative or non-finite probability");
      }
    }
    double sum = c.p_i + c.p_x + c.p_y + c.p_z;
    if (std::abs(sum - 1.0) > kSumTolerance) {
      throw std::invalid_argument("channel: qubit " + std::to_string(q + 1) +
                                  " probabilities sum to " + format_double(sum));
    }
  }
}

ChannelSchedule depolarizing(size_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("depolarizing: p = " + format_double(p) + " outside [0, 1]");
  }
  return ChannelSchedule(std::vector<QubitChannel>(n, {1.0 - p, p / 3, p / 3, p / 3}));
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t master, uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream));
}

uint64_t Rng::below(uint64_t bound) {
  // Rejection sampling keeps the result exactly uniform.
  uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
  uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

Pauli sample_error(const ChannelSchedule& schedule, Rng& rng) {
  static constexpr SingleQubitPauli kOrder[] = {SingleQubitPauli::I, SingleQubitPauli::X,
                                                SingleQubitPauli::Y, SingleQubitPauli::Z};
  Pauli e = Pauli::identity(schedule.num_qubits());
  for (size_t q = 1; q <= schedule.num_qubits(); q++) {
    const auto& c = schedule.at(q);
    double u = rng.uniform();
    double cumulative = 0.0;
    SingleQubitPauli chosen = SingleQubitPauli::I;
    for (auto kind : kOrder) {
      double p = c.of(kind);
      if (p <= 0.0) continue;
      chosen = kind;  // round-off past the total lands on the last positive entry
      cumulative += p;
      if (u < cumulative) break;
    }
    if (chosen != SingleQubitPauli::I) e.set(q, chosen);
  }
  return e;
}

Pauli sample_error(const ChannelSchedule& schedule, uint64_t seed) {
  Rng rng(seed);
  return sample_error(schedule, rng);
}

double log_likelihood(const ChannelSchedule& schedule, const Pauli& error) {
  if (error.num_qubits() != schedule.num_qubits()) {
    throw DimensionError("log_likelihood: error has " + std::to_string(error.num_qubits()) +
                         " qubits, schedule has " + std::to_string(schedule.num_qubits()));
  }
  double total = 0.0;
  for (size_t q = 1; q <= schedule.num_qubits(); q++) {
    double p = schedule.at(q).of(error.at(q));
    if (p <= 0.0) return -std::numeric_limits<double>::infinity();
    total += std::log(p);
  }
  return total;
}

ChannelSchedule ChannelSpec::instantiate(size_t n) const {
  if (type == Type::Depolarizing) return depolarizing(n, p);
  if (probs.size() != n) {
    throw std::invalid_argument("channel schedule has " + std::to_string(probs.size()) +
                                " entries, code has " + std::to_string(n) + " qubits");
  }
  return ChannelSchedule(probs);
}

std::string ChannelSpec::label() const {
  if (type == Type::Depolarizing) return format_double(p);
  return id.empty() ? std::string("schedule") : id;
}

ChannelSpec parse_channel_spec(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("channel config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("channel config: expected a JSON object");
  if (!j.contains("type") || !j["type"].is_string()) {
    throw std::invalid_argument("channel config: missing string key 'type'");
  }
  ChannelSpec spec;
  std::string type = j["type"].get<std::string>();
  if (j.contains("id")) {
    if (!j["id"].is_string()) throw std::invalid_argument("channel config: 'id' must be a string");
    spec.id = j["id"].get<std::string>();
  }
  if (type == "depolarizing") {
    spec.type = ChannelSpec::Type::Depolarizing;
    for (const auto& item : j.items()) {
      if (item.key() != "type" && item.key() != "p" && item.key() != "id") {
        throw std::invalid_argument("channel config: unknown key '" + item.key() + "'");
      }
    }
    if (!j.contains("p") || !j["p"].is_number()) {
      throw std::invalid_argument("channel config: depolarizing channel needs numeric key 'p'");
    }
    spec.p = j["p"].get<double>();
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
      throw std::invalid_argument("channel config: key 'p' outside [0, 1]");
    }
  } else if (type == "schedule") {
    spec.type = ChannelSpec::Type::Schedule;
    for (const auto& item : j.items()) {
      if (item.key() != "type" && item.key() != "probs" && item.key() != "id") {
        throw std::invalid_argument("channel config: unknown key '" + item.key() + "'");
      }
    }
    if (!j.contains("probs") || !j["probs"].is_array()) {
      throw std::invalid_argument("channel config: schedule needs array key 'probs'");
    }
    for (const auto& row : j["probs"]) {
      if (!row.is_array() || row.size() != 4) {
        throw std::invalid_argument("channel config: each 'probs' entry must be [pI,pX,pY,pZ]");
      }
      for (const auto& v : row) {
        if (!v.is_number()) throw std::invalid_argument("channel config: non-numeric probability");
      }
      spec.probs.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>(),
                            row[3].get<double>()});
    }
    ChannelSchedule validated(spec.probs);  // throws on bad quadruples
  } else {
    throw std::invalid_argument("channel config: unknown type '" + type + "'");
  }
  return spec;
}

std::string channel_spec_to_json(const ChannelSpec& spec) {
  nlohmann::ordered_json j;
  if (spec.type == ChannelSpec::Type::Depolarizing) {
    j["type"] = "depolarizing";
    j["p"] = spec.p;
  } else {
    j["type"] = "schedule";
    auto rows = nlohmann::ordered_json::array();
    for (const auto& c : spec.probs) rows.push_back({c.p_i, c.p_x, c.p_y, c.p_z});
    j["probs"] = rows;
  }
  if (!spec.id.empty()) j["id"] = spec.id;
  return j.dump() + "\n";
}

ChannelSpec schedule_spec(const ChannelSchedule& schedule, std::string id) {
  ChannelSpec spec;
  spec.type = ChannelSpec::Type::Schedule;
  spec.probs = schedule.qubits();
  spec.id = std::move(id);
  return spec;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace qconv
