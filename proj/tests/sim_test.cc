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

#include <gtest/gtest.h>

#include <random>

#include "oracle.h"

using namespace qconv;

TEST(Sim, ClassifyResidualExamples) {
  ConvolutionalCode code = build_code(2);
  Pauli e = Pauli::from_string("XIIZIIYIIIIZ");
  EXPECT_TRUE(classify_residual(code, e, e).success());

  ResidualClass degenerate = classify_residual(code, e, multiply(e, code.generators()[3]));
  EXPECT_TRUE(degenerate.success());
  EXPECT_TRUE(degenerate.action.none());

  ResidualClass logical = classify_residual(code, e, multiply(e, code.logical_x()[0]));
  EXPECT_FALSE(logical.success());
  EXPECT_EQ(logical.action.str(), "0100");

  EXPECT_THROW(classify_residual(code, e, Pauli::identity(12)), PreconditionError);
  EXPECT_THROW(classify_residual(code, e, Pauli::identity(11)), DimensionError);
}

TEST(Sim, WilsonInterval) {
  Interval zero = wilson_interval(0, 100);
  EXPECT_EQ(zero.low, 0.0);
  EXPECT_NEAR(zero.high, 0.036995, 1e-5);
  Interval half = wilson_interval(50, 100);
  EXPECT_NEAR(half.low, 0.403832, 1e-5);
  EXPECT_NEAR(half.high, 0.596168, 1e-5);
  Interval all = wilson_interval(10, 10);
  EXPECT_EQ(all.high, 1.0);
  EXPECT_THROW(wilson_interval(1, 0), std::invalid_argument);
  EXPECT_THROW(wilson_interval(3, 2), std::invalid_argument);
}

TEST(SimProperty, WilsonContainsRate) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 1000; t++) {
    size_t n = 1 + rng() % 100000;
    size_t k = rng() % (n + 1);
    Interval ci = wilson_interval(k, n);
    double rate = static_cast<double>(k) / static_cast<double>(n);
    EXPECT_LE(ci.low, rate);
    EXPECT_GE(ci.high, rate);
    EXPECT_GE(ci.low, 0.0);
    EXPECT_LE(ci.high, 1.0);
  }
}

TEST(Sim, NoiselessRateIsZero) {
  for (size_t blocks : {1, 4}) {
    ConvolutionalCode code = build_code(blocks);
    SimOptions opt;
    opt.trials = 200;
    SimStats stats = run_trials(code, depolarizing(code.num_qubits(), 0.0), opt, "0");
    EXPECT_EQ(stats.logical_errors, 0u);
    EXPECT_EQ(stats.rate, 0.0);
    EXPECT_EQ(stats.infeasible, 0u);
    EXPECT_EQ(stats.trials, 200u);
    EXPECT_EQ(stats.qubits, code.num_qubits());
  }
}

TEST(Sim, SameSeedSameStats) {
  ConvolutionalCode code = build_code(3);
  auto s = depolarizing(code.num_qubits(), 0.05);
  SimOptions opt;
  opt.trials = 2000;
  opt.master_seed = 99;
  SimStats a = run_trials(code, s, opt);
  SimStats b = run_trials(code, s, opt);
  opt.jobs = 4;
  SimStats c = run_trials(code, s, opt);
  EXPECT_EQ(a.logical_errors, b.logical_errors);
  EXPECT_EQ(a.logical_errors, c.logical_errors);
  EXPECT_GT(a.logical_errors, 0u);
  EXPECT_EQ(stats_to_csv({a}, false), stats_to_csv({c}, false));
}

TEST(Sim, RandomTieModeReproducible) {
  ConvolutionalCode code = build_code(2);
  auto s = depolarizing(12, 0.1);
  SimOptions opt;
  opt.trials = 1000;
  opt.tie_mode = TieMode::Random;
  opt.jobs = 3;
  EXPECT_EQ(run_trials(code, s, opt).logical_errors, run_trials(code, s, opt).logical_errors);
}

TEST(Sim, RunTrialOutcomeInvariant) {
  ConvolutionalCode code = build_code(4);
  auto s = depolarizing(code.num_qubits(), 0.08);
  ViterbiDecoder dec(code, s);
  for (uint64_t seed = 0; seed < 300; seed++) {
    TrialOutcome o = run_trial(code, s, dec, seed, TieMode::Deterministic);
    EXPECT_FALSE(o.infeasible);
    EXPECT_EQ(o.sampled_error, sample_error(s, seed));
    Pauli residual = multiply(o.sampled_error, o.decoded_error);
    EXPECT_TRUE(syndrome_of(code, residual).is_zero());
    EXPECT_EQ(o.residual.success(), in_stabilizer(code, residual));
  }
}

TEST(Sim, ViterbiAndExhaustiveAgreePerTrial) {
  ConvolutionalCode code = build_code(2);
  auto s = depolarizing(12, 0.06);
  SimOptions opt;
  opt.trials = 3000;
  opt.master_seed = 5;
  SimStats a = run_trials(code, s, opt);
  opt.decoder = DecoderKind::Exhaustive;
  SimStats b = run_trials(code, s, opt);
  EXPECT_EQ(a.logical_errors, b.logical_errors);
  opt.tie_mode = TieMode::Random;
  EXPECT_THROW(run_trials(code, s, opt), std::invalid_argument);
}

TEST(Sim, ZeroTrialsRejected) {
  ConvolutionalCode code = build_code(1);
  SimOptions opt;
  opt.trials = 0;
  EXPECT_THROW(run_trials(code, depolarizing(7, 0.1), opt), std::invalid_argument);
}

TEST(Sim, SweepRowsAndSeeds) {
  SweepSpec spec;
  spec.blocks = {2, 4};
  for (double p : {0.01, 0.02}) {
    ChannelSpec c;
    c.p = p;
    spec.channels.push_back(c);
  }
  spec.trials = 500;
  spec.master_seed = 17;
  auto rows = sweep(spec);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].blocks, 2u);
  EXPECT_EQ(rows[1].channel_label, "0.02");
  EXPECT_EQ(rows[2].blocks, 4u);
  for (size_t r = 0; r < 4; r++) EXPECT_EQ(rows[r].master_seed, derive_seed(17, r));

  // A row can be reproduced on its own from the reported seed.
  SimOptions opt;
  opt.trials = 500;
  opt.master_seed = rows[3].master_seed;
  ConvolutionalCode code = build_code(4);
  EXPECT_EQ(run_trials(code, depolarizing(22, 0.02), opt).logical_errors,
            rows[3].logical_errors);
  spec.jobs = 4;
  EXPECT_EQ(stats_to_csv(sweep(spec), false), stats_to_csv(rows, false));
}

TEST(Sim, SweepNoiselessSingleRow) {
  SweepSpec spec;
  spec.blocks = {1};
  spec.channels.push_back(ChannelSpec{});
  spec.trials = 10;
  auto rows = sweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].rate, 0.0);
}

TEST(Sim, RatesIncreaseWithNoise) {
  SweepSpec spec;
  spec.blocks = {2};
  for (double p : {0.01, 0.04, 0.16}) {
    ChannelSpec c;
    c.p = p;
    spec.channels.push_back(c);
  }
  spec.trials = 4000;
  spec.jobs = 4;
  auto rows = sweep(spec);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_LT(rows[0].ci_low, rows[1].ci_high);
  EXPECT_LT(rows[0].rate, rows[1].rate);
  EXPECT_LT(rows[1].rate, rows[2].rate);
}

TEST(Sim, CsvAndJsonFormat) {
  SimStats s;
  s.blocks = 2;
  s.qubits = 12;
  s.channel_label = "0.001";
  s.trials = 10;
  s.logical_errors = 1;
  s.rate = 0.1;
  s.ci_low = 0.01;
  s.ci_high = 0.4;
  s.master_seed = 7;
  s.elapsed_s = 1.5;
  EXPECT_EQ(stats_to_csv({s}, false),
            "N,n,p_or_schedule_id,trials,logical_errors,rate,ci_low,ci_high,seed,elapsed_s\n"
            "2,12,0.001,10,1,0.1,0.01,0.4,7,NA\n");
  EXPECT_EQ(stats_to_csv({s}, true).substr(stats_to_csv({s}, true).rfind(',')), ",1.5\n");
  s.channel_label = "a,b";
  EXPECT_NE(stats_to_csv({s}, false).find("\"a,b\""), std::string::npos);

  std::string json = stats_to_json({s}, false);
  EXPECT_NE(json.find("\"logical_errors\": 1"), std::string::npos);
  EXPECT_NE(json.find("\"elapsed_s\": null"), std::string::npos);
}
