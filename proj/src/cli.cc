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


#include "qconv/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qconv/channel.h"
#include "qconv/circuits.h"
#include "qconv/code.h"
#include "qconv/decoder.h"
#include "qconv/sim.h"

namespace qconv {
namespace {

constexpr uint64_t kDefaultSeed = 1;
constexpr double kOracleTolerance = 1e-9;

// Configuration problems: reported on stderr, exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  if (!f.flush()) throw std::runtime_error("write to '" + path + "' failed");
}

ChannelSpec load_channel(const std::string& path) {
  try {
    return parse_channel_spec(read_file(path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

ChannelSchedule load_schedule(const std::string& path, size_t n) {
  ChannelSpec spec = load_channel(path);
  try {
    return spec.instantiate(n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

TieMode parse_tie_mode(const std::string& s) {
  if (s == "deterministic") return TieMode::Deterministic;
  if (s == "random") return TieMode::Random;
  throw UsageError("tie mode must be 'deterministic' or 'random', got '" + s + "'");
}

// ---- config files ---------------------------------------------------------

nlohmann::json parse_config(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError(path + ": expected a JSON object");
  return j;
}

void reject_unknown(const nlohmann::json& j, const std::vector<std::string>& allowed,
                    const std::string& path) {
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw UsageError(path + ": unknown key '" + item.key() + "'");
    }
  }
}

const nlohmann::json& require(const nlohmann::json& j, const std::string& key,
                              const std::string& path) {
  if (!j.contains(key)) throw UsageError(path + ": missing key '" + key + "'");
  return j[key];
}

size_t positive_int(const nlohmann::json& v, const std::string& key, const std::string& path) {
  if (!v.is_number_integer() || v.get<int64_t>() < 1) {
    throw UsageError(path + ": key '" + key + "' must be a positive integer");
  }
  return v.get<size_t>();
}

uint64_t seed_value(const nlohmann::json& j, const std::string& path) {
  if (!j.contains("seed")) return kDefaultSeed;
  const auto& v = j["seed"];
  if (!v.is_number_unsigned()) {
    throw UsageError(path + ": key 'seed' must be a nonnegative integer");
  }
  return v.get<uint64_t>();
}

TieMode tie_value(const nlohmann::json& j, const std::string& path) {
  if (!j.contains("tie_mode")) return TieMode::Deterministic;
  if (!j["tie_mode"].is_string()) throw UsageError(path + ": key 'tie_mode' must be a string");
  try {
    return parse_tie_mode(j["tie_mode"].get<std::string>());
  } catch (const UsageError& e) {
    throw UsageError(path + ": key 'tie_mode': " + e.what());
  }
}

struct SimulateConfig {
  size_t blocks;
  ChannelSpec channel;
  size_t trials;
  uint64_t seed;
  TieMode tie_mode;
};

SimulateConfig load_simulate_config(const std::string& path) {
  nlohmann::json j = parse_config(path);
  reject_unknown(j, {"blocks", "channel", "trials", "seed", "tie_mode"}, path);
  SimulateConfig c;
  c.blocks = positive_int(require(j, "blocks", path), "blocks", path);
  c.trials = positive_int(require(j, "trials", path), "trials", path);
  const auto& ch = require(j, "channel", path);
  try {
    c.channel = parse_channel_spec(ch.dump());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": key 'channel': " + e.what());
  }
  c.seed = seed_value(j, path);
  c.tie_mode = tie_value(j, path);
  return c;
}

SweepSpec load_sweep_config(const std::string& path) {
  nlohmann::json j = parse_config(path);
  reject_unknown(j, {"blocks", "p", "trials", "seed", "tie_mode"}, path);
  SweepSpec s;
  const auto& blocks = require(j, "blocks", path);
  const auto& ps = require(j, "p", path);
  if (!blocks.is_array() || blocks.empty()) {
    throw UsageError(path + ": key 'blocks' must be a nonempty array");
  }
  if (!ps.is_array() || ps.empty()) throw UsageError(path + ": key 'p' must be a nonempty array");
  for (const auto& b : blocks) s.blocks.push_back(positive_int(b, "blocks", path));
  for (const auto& p : ps) {
    if (!p.is_number() || !(p.get<double>() >= 0.0 && p.get<double>() <= 1.0)) {
      throw UsageError(path + ": key 'p' entries must be numbers in [0, 1]");
    }
    ChannelSpec spec;
    spec.type = ChannelSpec::Type::Depolarizing;
    spec.p = p.get<double>();
    s.channels.push_back(spec);
  }
  s.trials = positive_int(require(j, "trials", path), "trials", path);
  s.master_seed = seed_value(j, path);
  s.tie_mode = tie_value(j, path);
  return s;
}

// ---- verify ---------------------------------------------------------------

struct CheckRow {
  std::string name;
  std::optional<bool> passed;  // nullopt: skipped
  std::string detail;
};

std::vector<std::vector<uint8_t>> contract_inputs(size_t blocks) {
  std::vector<std::vector<uint8_t>> inputs;
  if (blocks <= 6) {
    for (uint64_t v = 0; v < (uint64_t{1} << blocks); v++) {
      std::vector<uint8_t> bits(blocks);
      for (size_t i = 0; i < blocks; i++) bits[i] = (v >> i) & 1U;
      inputs.push_back(bits);
    }
    return inputs;
  }
  inputs.emplace_back(blocks, 0);
  inputs.emplace_back(blocks, 1);
  std::vector<uint8_t> alt(blocks);
  for (size_t i = 0; i < blocks; i++) alt[i] = i % 2;
  inputs.push_back(alt);
  Rng rng(kDefaultSeed);
  for (int r = 0; r < 5; r++) {
    std::vector<uint8_t> bits(blocks);
    for (auto& b : bits) b = rng.next() & 1U;
    inputs.push_back(bits);
  }
  return inputs;
}

std::vector<CheckRow> verify_rows(const ConvolutionalCode& code) {
  std::vector<CheckRow> rows;
  VerifyReport r = verify_code(code);
  rows.push_back({"generators commute", r.generator_commutation, ""});
  rows.push_back({"generators independent", r.generators_independent(),
                  "rank " + std::to_string(r.generator_rank) + " of " +
                      std::to_string(r.num_generators)});
  rows.push_back({"encoded dimension", r.encoded_dimension_exponent == int64_t(code.blocks()),
                  "2^" + std::to_string(r.encoded_dimension_exponent)});
  rows.push_back({"logical conditions", r.logical_conditions_hold(),
                  std::to_string(r.num_logical) + " logical pairs"});
  for (const auto& f : r.failures) rows.push_back({"  " + f, false, ""});

  if (!code.is_canonical()) {
    for (const char* name : {"trellis locality", "encoder layer count", "encoder layer commutation",
                             "decoder layer commutation", "encoder contract"}) {
      rows.push_back({name, std::nullopt, "code differs from the built-in construction"});
    }
    return rows;
  }
  size_t blocks = code.blocks();
  rows.push_back({"trellis locality", trellis_locality_holds(code), ""});
  LayeredCircuit enc = build_encoding_circuit(blocks);
  LayeredCircuit dec = build_decoding_circuit(blocks);
  rows.push_back({"encoder layer count", enc.num_layers() == 6,
                  std::to_string(enc.num_layers()) + " layers"});
  rows.push_back({"encoder layer commutation", verify_layer_commutation(enc), ""});
  rows.push_back({"decoder layer commutation",
                  verify_layer_commutation(dec) && dec == reverse_layers(enc), ""});
  auto inputs = contract_inputs(blocks);
  size_t good = 0;
  for (const auto& bits : inputs) good += check_encoder_contract(code, enc, bits);
  rows.push_back({"encoder contract", good == inputs.size(),
                  std::to_string(good) + "/" + std::to_string(inputs.size()) + " inputs"});
  return rows;
}

int cmd_verify(std::optional<size_t> blocks, const std::string& code_path, std::ostream& out) {
  ConvolutionalCode code = [&] {
    if (!code_path.empty()) {
      try {
        return code_from_json(read_file(code_path));
      } catch (const std::invalid_argument& e) {
        throw UsageError(code_path + ": " + e.what());
      }
    }
    return build_code(*blocks);
  }();
  auto rows = verify_rows(code);
  bool all = true;
  size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.name.size());
  out << "code: N=" << code.blocks() << ", n=" << code.num_qubits() << "\n";
  for (const auto& row : rows) {
    const char* status = !row.passed ? "SKIP" : *row.passed ? "PASS" : "FAIL";
    if (row.passed && !*row.passed) all = false;
    out << std::left << std::setw(static_cast<int>(width) + 2) << row.name << status;
    if (!row.detail.empty()) out << "  " << row.detail;
    out << "\n";
  }
  out << (all ? "PASS" : "FAIL") << "\n";
  return all ? kExitOk : kExitCheckFailed;
}

// ---- decode / oracle-check ------------------------------------------------

int cmd_decode(size_t blocks, const std::string& bits, const std::string& channel_path,
               const std::string& tie, uint64_t seed, std::ostream& out, std::ostream& err) {
  ConvolutionalCode code = build_code(blocks);
  size_t expected = code.num_generators();
  if (bits.size() != expected) {
    err << "syndrome has " << bits.size() << " bits; N=" << blocks << " needs " << expected
        << "\n";
    return kExitUsage;
  }
  Syndrome syn;
  try {
    syn = Syndrome::from_string(bits);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--syndrome: ") + e.what());
  }
  ChannelSchedule schedule = load_schedule(channel_path, code.num_qubits());
  DecodeResult r;
  try {
    r = viterbi_decode(code, schedule, syn, {parse_tie_mode(tie), seed});
  } catch (const InfeasibleSyndrome& e) {
    err << e.what() << "\n";
    return kExitCheckFailed;
  }
  nlohmann::ordered_json j;
  j["error"] = r.error.str();
  j["log_likelihood"] = r.log_likelihood;
  j["tie_broken"] = r.tie_broken;
  out << j.dump() << "\n";
  return kExitOk;
}

int cmd_oracle_check(size_t blocks, const std::string& channel_path, bool all, size_t samples,
                     uint64_t seed, std::ostream& out, std::ostream& err) {
  if (5 * blocks + 2 > kMaxBruteForceQubits) {
    err << "oracle-check enumerates every Pauli and only supports N <= 2\n";
    return kExitUsage;
  }
  if (all == (samples > 0)) {
    err << "give exactly one of --all-syndromes and --samples K\n";
    return kExitUsage;
  }
  ConvolutionalCode code = build_code(blocks);
  ChannelSchedule schedule = load_schedule(channel_path, code.num_qubits());
  ViterbiDecoder viterbi(code, schedule);
  ExhaustiveDecoder oracle(code, schedule);
  size_t m = code.num_generators();

  std::vector<Syndrome> syndromes;
  if (all) {
    for (uint64_t v = 0; v < (uint64_t{1} << m); v++) {
      Syndrome s(m);
      for (size_t k = 0; k < m; k++) s.set(k, (v >> k) & 1U);
      syndromes.push_back(s);
    }
  } else {
    Rng rng(seed);
    for (size_t t = 0; t < samples; t++) {
      Syndrome s(m);
      for (size_t k = 0; k < m; k++) s.set(k, rng.next() & 1U);
      syndromes.push_back(s);
    }
  }

  size_t mismatches = 0;
  size_t infeasible = 0;
  size_t same_error = 0;
  double max_delta = 0.0;
  for (const auto& s : syndromes) {
    std::optional<DecodeResult> a;
    std::optional<DecodeResult> b;
    try {
      a = viterbi.decode(s);
    } catch (const InfeasibleSyndrome&) {
    }
    try {
      b = oracle.decode(s);
    } catch (const InfeasibleSyndrome&) {
    }
    if (!a && !b) {
      infeasible++;
      continue;
    }
    if (!a || !b) {
      mismatches++;
      out << "mismatch " << s.str() << ": only one decoder found an error\n";
      continue;
    }
    double delta = std::fabs(a->log_likelihood - b->log_likelihood);
    max_delta = std::max(max_delta, delta);
    same_error += a->error == b->error;
    if (!(delta <= kOracleTolerance)) {
      mismatches++;
      out << "mismatch " << s.str() << ": viterbi " << format_double(a->log_likelihood)
          << " brute force " << format_double(b->log_likelihood) << "\n";
    }
  }
  out << "syndromes: " << syndromes.size() << "\n";
  out << "infeasible: " << infeasible << "\n";
  out << "identical errors: " << same_error << "\n";
  out << "max |dLL|: " << format_double(max_delta) << "\n";
  out << "mismatches: " << mismatches << "\n";
  return mismatches == 0 ? kExitOk : kExitCheckFailed;
}

// ---- simulate / sweep / export --------------------------------------------

std::string render(const std::vector<SimStats>& rows, const std::string& format, bool timing) {
  if (format == "json") return stats_to_json(rows, timing);
  return stats_to_csv(rows, timing);
}

int cmd_simulate(const std::string& config, const std::string& format, const std::string& out_path,
                 size_t jobs, bool timing, std::ostream& out) {
  SimulateConfig c = load_simulate_config(config);
  ConvolutionalCode code = build_code(c.blocks);
  ChannelSchedule schedule = [&] {
    try {
      return c.channel.instantiate(code.num_qubits());
    } catch (const std::invalid_argument& e) {
      throw UsageError(config + ": key 'channel': " + e.what());
    }
  }();
  SimOptions options;
  options.trials = c.trials;
  options.master_seed = c.seed;
  options.tie_mode = c.tie_mode;
  options.jobs = jobs;
  SimStats stats = run_trials(code, schedule, options, c.channel.label());
  write_output(out_path, render({stats}, format, timing), out);
  return kExitOk;
}

int cmd_sweep(const std::string& config, const std::string& format, const std::string& out_path,
              size_t jobs, bool timing, std::ostream& out) {
  SweepSpec spec = load_sweep_config(config);
  spec.jobs = jobs;
  write_output(out_path, render(sweep(spec), format, timing), out);
  return kExitOk;
}

int cmd_export(size_t blocks, const std::string& which, const std::string& out_path,
               std::ostream& out) {
  LayeredCircuit c = which == "encode" ? build_encoding_circuit(blocks)
                                       : build_decoding_circuit(blocks);
  write_output(out_path, circuit_to_text(c), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rate-1/5 quantum convolutional code: construction, circuits and ML decoding"};
  app.require_subcommand(1);

  std::optional<size_t> blocks;
  std::string code_path;
  std::string channel_path;
  std::string syndrome;
  std::string tie = "deterministic";
  uint64_t seed = kDefaultSeed;
  bool all_syndromes = false;
  size_t samples = 0;
  std::string config;
  std::string format = "csv";
  std::string out_path;
  size_t jobs = 1;
  bool timing = false;
  std::string which;

  auto blocks_option = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--blocks", blocks, "number of logical blocks N")
                    ->check(CLI::Range(size_t{1}, size_t{1} << 24));
    if (required) opt->required();
    return opt;
  };

  auto* verify = app.add_subcommand("verify", "check the code and its circuits");
  auto* verify_blocks = blocks_option(verify, false);
  auto* verify_code_opt =
      verify->add_option("--code", code_path, "code description JSON")->check(CLI::ExistingFile);
  verify_blocks->excludes(verify_code_opt);

  auto* describe = app.add_subcommand("describe", "print the code as JSON");
  blocks_option(describe, true);

  auto* decode = app.add_subcommand("decode", "maximum likelihood error for one syndrome");
  blocks_option(decode, true);
  decode->add_option("--syndrome", syndrome, "syndrome bits s(M_0) ... s(M_inf)")->required();
  decode->add_option("--channel", channel_path, "channel JSON")->required();
  decode->add_option("--tie", tie, "deterministic or random")
      ->check(CLI::IsMember({"deterministic", "random"}));
  decode->add_option("--seed", seed, "seed for random tie-breaking");

  auto* oracle = app.add_subcommand("oracle-check", "compare against exhaustive search");
  blocks_option(oracle, true);
  oracle->add_option("--channel", channel_path, "channel JSON")->required();
  oracle->add_flag("--all-syndromes", all_syndromes, "check every syndrome");
  oracle->add_option("--samples", samples, "number of random syndromes")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--seed", seed, "seed for syndrome sampling");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo logical error rate");
  auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo over a grid of N and p");
  for (auto* sub : {simulate, sweep_cmd}) {
    sub->add_option("--config", config, "config JSON")->required();
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", timing, "fill the elapsed_s column");
  }

  auto* export_cmd = app.add_subcommand("export-circuit", "write the encoding or decoding circuit");
  blocks_option(export_cmd, true);
  export_cmd->add_option("--which", which, "encode or decode")
      ->required()
      ->check(CLI::IsMember({"encode", "decode"}));
  export_cmd->add_option("--out", out_path, "output file (default stdout)");

  std::vector<const char*> argv{"qconv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (!blocks && code_path.empty()) {
        err << "verify needs --blocks N or --code FILE\n";
        return kExitUsage;
      }
      return cmd_verify(blocks, code_path, out);
    }
    if (describe->parsed()) {
      out << code_to_json(build_code(*blocks));
      return kExitOk;
    }
    if (decode->parsed()) return cmd_decode(*blocks, syndrome, channel_path, tie, seed, out, err);
    if (oracle->parsed()) {
      return cmd_oracle_check(*blocks, channel_path, all_syndromes, samples, seed, out, err);
    }
    if (simulate->parsed()) return cmd_simulate(config, format, out_path, jobs, timing, out);
    if (sweep_cmd->parsed()) return cmd_sweep(config, format, out_path, jobs, timing, out);
    if (export_cmd->parsed()) return cmd_export(*blocks, which, out_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace qconv
