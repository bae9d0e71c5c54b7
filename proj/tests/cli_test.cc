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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qconv/circuits.h"

using namespace qconv;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("qconv_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, VerifyPasses) {
  for (const char* n : {"1", "64"}) {
    CliResult r = run({"verify", "--blocks", n});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("encoder contract"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
}

TEST_F(CliTest, VerifyRejectsZeroBlocks) {
  EXPECT_EQ(run({"verify", "--blocks", "0"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
}

TEST_F(CliTest, VerifyLoadedCodeAndMutation) {
  CliResult d = run({"describe", "--blocks", "2"});
  ASSERT_EQ(d.code, 0);
  std::string good = write("good.json", d.out);
  CliResult ok = run({"verify", "--code", good});
  EXPECT_EQ(ok.code, 0) << ok.out;

  auto j = nlohmann::json::parse(d.out);
  std::string g = j["generators"][2];
  g[1] = 'Y';
  j["generators"][2] = g;
  std::string bad = write("bad.json", j.dump());
  CliResult fail = run({"verify", "--code", bad});
  EXPECT_EQ(fail.code, 1);
  EXPECT_NE(fail.out.find("generators commute"), std::string::npos);
  EXPECT_NE(fail.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, DecodeExamples) {
  std::string ch = write("dep.json", R"({"type":"depolarizing","p":0.01})");
  CliResult zero = run({"decode", "--blocks", "1", "--syndrome", "000000", "--channel", ch});
  ASSERT_EQ(zero.code, 0) << zero.err;
  auto j = nlohmann::json::parse(zero.out);
  EXPECT_EQ(j["error"], "IIIIIII");
  EXPECT_NEAR(j["log_likelihood"].get<double>(), 7 * std::log(0.99), 1e-9);
  EXPECT_EQ(j["tie_broken"], false);

  CliResult x = run({"decode", "--blocks", "1", "--syndrome", "010000", "--channel", ch});
  ASSERT_EQ(x.code, 0);
  EXPECT_EQ(nlohmann::json::parse(x.out)["error"], "XIIIIII");

  CliResult bad = run({"decode", "--blocks", "1", "--syndrome", "01000", "--channel", ch});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("6"), std::string::npos);

  CliResult random = run({"decode", "--blocks", "1", "--syndrome", "011000", "--channel", ch, "--tie",
                    "random", "--seed", "4"});
  EXPECT_EQ(random.code, 0);
}

TEST_F(CliTest, DecodeInfeasibleAndBadChannel) {
  std::string clean = write("clean.json", R"({"type":"depolarizing","p":0})");
  EXPECT_EQ(run({"decode", "--blocks", "1", "--syndrome", "010000", "--channel", clean}).code, 1);
  std::string bad = write("bad.json", R"({"type":"depolarizing","p":0.1,"extra":1})");
  CliResult r = run({"decode", "--blocks", "1", "--syndrome", "010000", "--channel", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("extra"), std::string::npos);
  EXPECT_EQ(
      run({"decode", "--blocks", "1", "--syndrome", "010000", "--channel", path("none")}).code, 2);
}

TEST_F(CliTest, OracleCheck) {
  std::string ch = write("dep.json", R"({"type":"depolarizing","p":0.05})");
  CliResult all = run({"oracle-check", "--blocks", "1", "--channel", ch, "--all-syndromes"});
  EXPECT_EQ(all.code, 0) << all.out;
  EXPECT_NE(all.out.find("syndromes: 64"), std::string::npos);
  EXPECT_NE(all.out.find("mismatches: 0"), std::string::npos);

  CliResult sampled =
      run({"oracle-check", "--blocks", "2", "--channel", ch, "--samples", "200", "--seed", "3"});
  EXPECT_EQ(sampled.code, 0) << sampled.out;
  EXPECT_NE(sampled.out.find("syndromes: 200"), std::string::npos);

  EXPECT_EQ(run({"oracle-check", "--blocks", "3", "--channel", ch, "--all-syndromes"}).code, 2);
  EXPECT_EQ(run({"oracle-check", "--blocks", "1", "--channel", ch}).code, 2);
}

TEST_F(CliTest, SimulateNoiseless) {
  std::string cfg = write(
      "sim.json",
      R"({"blocks":2,"channel":{"type":"depolarizing","p":0},"trials":50,"seed":3})");
  CliResult r = run({"simulate", "--config", cfg});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string header =
      "N,n,p_or_schedule_id,trials,logical_errors,rate,ci_low,ci_high,seed,elapsed_s\n";
  ASSERT_EQ(r.out.rfind(header, 0), 0u);
  std::string row = r.out.substr(header.size());
  EXPECT_EQ(row.rfind("2,12,0,50,0,0,0,", 0), 0u) << row;
  EXPECT_EQ(row.substr(row.size() - 6), ",3,NA\n");
}

TEST_F(CliTest, SimulateScheduleChannel) {
  std::string probs;
  for (int q = 0; q < 7; q++) probs += std::string(q ? "," : "") + "[0.9,0.05,0.02,0.03]";
  std::string cfg = write("sim.json", R"({"blocks":1,"channel":{"type":"schedule","id":"flat","probs":[)" +
                                          probs + R"(]},"trials":100})");
  CliResult r = run({"simulate", "--config", cfg, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["p_or_schedule_id"], "flat");
  EXPECT_EQ(j[0]["seed"], 1);
}

TEST_F(CliTest, SweepDeterministicAcrossJobs) {
  std::string cfg =
      write("sweep.json", R"({"blocks":[2],"p":[0.01,0.02,0.04],"trials":3000,"seed":11})");
  CliResult a = run({"sweep", "--config", cfg});
  CliResult b = run({"sweep", "--config", cfg, "--jobs", "4"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 4);

  std::string out_path = path("rows.csv");
  EXPECT_EQ(run({"sweep", "--config", cfg, "--out", out_path}).code, 0);
  EXPECT_EQ(slurp(out_path), a.out);
}

TEST_F(CliTest, MalformedConfigsNameTheKey) {
  std::string unknown = write("u.json", R"({"blocks":[2],"p":[0.1],"trials":10,"trails":5})");
  CliResult r = run({"sweep", "--config", unknown});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("trails"), std::string::npos);

  std::string missing = write("m.json", R"({"blocks":2,"trials":10})");
  r = run({"simulate", "--config", missing});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("channel"), std::string::npos);

  std::string broken = write("b.json", "{\"blocks\": 2,\n  \"trials\": }");
  r = run({"simulate", "--config", broken});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);

  std::string tie = write(
      "t.json", R"({"blocks":1,"channel":{"type":"depolarizing","p":0.1},"trials":1,"tie_mode":"coin"})");
  r = run({"simulate", "--config", tie});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("tie_mode"), std::string::npos);
}

TEST_F(CliTest, ExportCircuit) {
  std::string enc = path("enc.txt");
  ASSERT_EQ(run({"export-circuit", "--blocks", "1", "--which", "encode", "--out", enc}).code, 0);
  std::string text = slurp(enc);
  EXPECT_EQ(circuit_from_text(text, 7).num_layers(), 6u);
  ASSERT_EQ(run({"export-circuit", "--blocks", "1", "--which", "encode", "--out", enc}).code, 0);
  EXPECT_EQ(slurp(enc), text);

  CliResult dec = run({"export-circuit", "--blocks", "1", "--which", "decode"});
  ASSERT_EQ(dec.code, 0);
  EXPECT_EQ(circuit_from_text(dec.out, 7), reverse_layers(circuit_from_text(text, 7)));
  EXPECT_EQ(run({"export-circuit", "--blocks", "1", "--which", "sideways"}).code, 2);
  EXPECT_NE(run({"export-circuit", "--blocks", "1", "--which", "encode", "--out",
                 path("missing/dir/x.txt")})
                .code,
            0);
}

TEST_F(CliTest, HelpAndUnknownCommand) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}
