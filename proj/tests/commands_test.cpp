// Copyright 2026 The icoheat Authors
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

#include "icoheat/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

using namespace icoheat;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream is(csv);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string p;
  while (std::getline(ss, p, ',')) parts.push_back(p);
  return parts;
}

}  // namespace

TEST(commands, ParseGridForms) {
  const auto g = parse_grid("0.05:0.45:0.10");
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g[0], 0.05);
  EXPECT_DOUBLE_EQ(g[2], 0.25);
  EXPECT_DOUBLE_EQ(g[4], 0.45);
  EXPECT_EQ(parse_grid("0.01:0.49:0.01").size(), 49u);
  EXPECT_EQ(parse_grid("0.1,0.2,0.3").size(), 3u);
  EXPECT_EQ(parse_grid("0.25"), std::vector<double>{0.25});
}

TEST(commands, ParseGridErrorsNameTheBound) {
  try {
    parse_grid("0.05:0.5:0.05");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("stop"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_grid("0:0.4:0.1"), ConfigError);
  EXPECT_THROW(parse_grid("0.1:0.4:0"), ConfigError);
  EXPECT_THROW(parse_grid("0.1:0.4:-0.1"), ConfigError);
  EXPECT_THROW(parse_grid("abc"), ConfigError);
  EXPECT_THROW(parse_grid(""), ConfigError);
  EXPECT_THROW(parse_grid("0.2,0.7"), ConfigError);
}

TEST(commands, SweepEnergyRows) {
  const auto r = cli({"sweep-energy", "--grid", "0.05:0.45:0.10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "e_c,dE_plus,dE_minus,dE_plus_weighted,dE_minus_weighted,p_minus,e_plus,e_minus");
  const auto row = split(lines[3]);
  EXPECT_DOUBLE_EQ(std::stod(row[0]), 0.25);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", std::stod(row[2]));
  EXPECT_STREQ(buf, "0.166667");
  EXPECT_NEAR(std::stod(row[2]), 1.0 / 6.0, 1e-15);
  RunConfig cfg;
  cfg.e_c = {0.25};
  const Table t = cmd_sweep_energy(cfg);
  const auto round_trip = split(data_lines([&] {
    std::ostringstream os;
    write_csv(t, os);
    return os.str();
  }())[1]);
  EXPECT_EQ(std::stod(round_trip[2]), std::get<double>(t.rows[0][2]));
  EXPECT_NE(r.out.find("# command: sweep-energy"), std::string::npos);
}

TEST(commands, MultipassAppendsSteadyStateRow) {
  const auto r = cli({"multipass", "--e-c", "0.25", "--steps", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_EQ(lines[0], "step,e_plus,e_minus,p_minus");
  EXPECT_EQ(split(lines[1])[0], "1");
  EXPECT_NEAR(std::stod(split(lines[1])[2]), 5.0 / 12.0, 1e-15);
  EXPECT_EQ(split(lines[11])[0], "ss");
  EXPECT_NEAR(std::stod(split(lines[11])[1]), 0.1771243444677046, 1e-15);
}

TEST(commands, CopRowsAndMetadata) {
  const auto r = cli({"cop", "--grid", "0.05,0.15,0.25,0.35,0.45"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 11u);
  EXPECT_NE(r.out.find("# beta_reset_rule: equal-cold"), std::string::npos);
  for (std::size_t i = 1; i < lines.size(); i += 2) {
    const auto classical = split(lines[i]);
    const auto multi = split(lines[i + 1]);
    EXPECT_EQ(classical[1], "classical");
    EXPECT_EQ(multi[1], "multi-pass");
    EXPECT_GT(std::stod(multi[6]), std::stod(classical[6]));
  }
  const auto explicit_beta = cli({"cop", "--e-c", "0.25", "--beta-reset", "2"});
  ASSERT_EQ(explicit_beta.code, 0) << explicit_beta.err;
  EXPECT_NE(explicit_beta.out.find("# beta_reset_rule: explicit:2"), std::string::npos);
}

TEST(commands, ShotsCsvIsByteDeterministic) {
  const std::vector<std::string> args{"simulate-shots", "--e-c", "0.25", "--shots", "20000",
                                      "--seed", "0x2a"};
  const auto a = cli(args);
  const auto b = cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("# rng: mt19937_64/splitmix64"), std::string::npos);
  EXPECT_NE(a.out.find("# seed: 0x2a"), std::string::npos);
  auto c = args;
  c.back() = "42";
  EXPECT_EQ(cli(c).out.substr(cli(c).out.find("e_c,")), a.out.substr(a.out.find("e_c,")));
  c.back() = "43";
  EXPECT_NE(cli(c).out.substr(cli(c).out.find("e_c,")), a.out.substr(a.out.find("e_c,")));
}

TEST(commands, JsonCarriesSchemaVersion) {
  const auto r = cli({"steady-state", "--e-c", "0.25", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"schema_version\": 1"), std::string::npos);
  EXPECT_NE(r.out.find("\"command\": \"steady-state\""), std::string::npos);
  EXPECT_NE(r.out.find("\"x_star\""), std::string::npos);
}

TEST(commands, JsonNullsVanishingBranch) {
  RunConfig cfg;
  cfg.command = Command::Multipass;
  cfg.e_c = {0.25};
  cfg.steps = 2;
  std::ostringstream os;
  write_json(cmd_multipass(cfg), os);
  EXPECT_EQ(os.str().find("null"), std::string::npos);

  Table t{"x", {}, {"a"}, {{Cell(std::monostate{})}}};
  std::ostringstream js;
  write_json(t, js);
  EXPECT_NE(js.str().find("null"), std::string::npos);
}

TEST(commands, VerifyExitCodes) {
  const auto ok = cli({"verify"});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(ok.err.find("[FAIL]"), std::string::npos);
  const auto bad = cli({"verify", "--visibility", "0.9"});
  EXPECT_EQ(bad.code, kExitVerifyFailed);
  EXPECT_NE(bad.err.find("[FAIL] closed_form_vs_kraus_sum"), std::string::npos);
}

TEST(commands, VerificationResidualsBelowTolerance) {
  for (const auto& c : run_verification()) {
    EXPECT_TRUE(c.passed) << c.name;
    EXPECT_LE(c.residual, c.tolerance) << c.name;
  }
}

TEST(commands, ConfigErrorsExitTwo) {
  EXPECT_EQ(cli({"sweep-energy", "--grid", "0.05:0.5:0.05"}).code, kExitConfigError);
  EXPECT_EQ(cli({"sweep-energy", "--e-c", "0.25", "--grid", "0.1,0.2"}).code, kExitConfigError);
  EXPECT_EQ(cli({"cop", "--beta-reset", "-1"}).code, kExitConfigError);
  EXPECT_EQ(cli({"simulate-shots", "--shots", "0"}).code, kExitConfigError);
  EXPECT_EQ(cli({"simulate-shots", "--seed", "zz"}).code, kExitConfigError);
  EXPECT_EQ(cli({"sweep-energy", "--visibility", "1.5"}).code, kExitConfigError);
  EXPECT_EQ(cli({"multipass", "--steps", "0"}).code, kExitConfigError);
  EXPECT_EQ(cli({"bogus"}).code, kExitConfigError);
  EXPECT_EQ(cli({}).code, kExitConfigError);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST(commands, OutputDirectoryFromEnvironment) {
  const auto dir = std::filesystem::temp_directory_path() / "icoheat_cmd_test";
  std::filesystem::create_directories(dir);
  ::setenv(kOutputDirEnv, dir.c_str(), 1);
  const auto r = cli({"steady-state", "--e-c", "0.25"});
  ::unsetenv(kOutputDirEnv);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(dir / "steady-state.csv");
  ASSERT_TRUE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("e_c,x_star"), std::string::npos);

  const auto explicit_out = dir / "explicit.json";
  const auto r2 = cli({"steady-state", "--e-c", "0.25", "--format", "json", "--out", explicit_out.string()});
  ASSERT_EQ(r2.code, 0) << r2.err;
  EXPECT_TRUE(std::filesystem::exists(explicit_out));
  std::filesystem::remove_all(dir);
}
