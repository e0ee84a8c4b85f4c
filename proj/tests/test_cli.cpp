// Copyright 2026 The fockcond Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path kWork = fs::path(FOCKCOND_TEST_WORKDIR) / "cli";

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  fs::create_directories(kWork);
  const fs::path capture = kWork / "stdout.txt";
  const std::string cmd = std::string("cd '") + kWork.string() + "' && '" + FOCKCOND_CLI_PATH + "' " + args +
                          " > '" + capture.string() + "' 2> '" + (kWork / "stderr.txt").string() + "'";
  const int status = std::system(cmd.c_str());
  std::ifstream f(capture);
  std::stringstream ss;
  ss << f.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream f(p);
  std::string line;
  while (std::getline(f, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

fs::path fresh(const std::string& name) {
  const fs::path d = kWork / name;
  fs::remove_all(d);
  return d;
}

TEST(Cli, NsSearchDefault) {
  const fs::path d = fresh("ns");
  ASSERT_EQ(run("--out " + d.string() + " ns-search").code, 0);
  const auto rows = read_csv(d / "table1.csv");
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"tau", "A0", "A1", "A2", "merit"}));
  bool found = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (std::abs(std::stod(rows[i][0]) - 6.5064) < 1e-3) {
      found = true;
      EXPECT_NEAR(std::stod(rows[i][2]), 0.97519, 1e-4);
    }
  }
  EXPECT_TRUE(found);
  const json j = json::parse(slurp(d / "table1.json"));
  EXPECT_EQ(j["solutions"].size(), 3u);
}

TEST(Cli, NsSearchNoSolution) {
  const fs::path d = fresh("ns_empty");
  EXPECT_EQ(run("--out " + d.string() + " ns-search --max-tau 5").code, 2);
  const auto rows = read_csv(d / "table1.csv");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0][0], "tau");
}

TEST(Cli, NsSearchTwoAtom) {
  const fs::path d = fresh("two");
  ASSERT_EQ(run("--out " + d.string() + " ns-search --two-atom").code, 0);
  const auto rows = read_csv(d / "two_atom.csv");
  ASSERT_GE(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"tau1", "tau2", "B0", "B1", "B2", "merit", "spread"}));
  bool found = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (std::abs(std::stod(rows[i][0]) - 37.79300921) < 1e-4 && std::abs(std::stod(rows[i][1]) - 197.78109842) < 1e-4) {
      found = true;
      for (int k = 2; k <= 4; ++k) EXPECT_NEAR(std::abs(std::stod(rows[i][static_cast<std::size_t>(k)])), 0.990321935, 1e-4);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, QFunctionHalfTurn) {
  const fs::path d = fresh("qf");
  ASSERT_EQ(run("--out " + d.string() + " qfunc --alpha 10 --theta 10pi").code, 0);
  const json lobes = json::parse(slurp(d / "lobes.json"));
  ASSERT_EQ(lobes["lobes"].size(), 2u);
  EXPECT_NEAR(lobes["lobes"][0]["angle"].get<double>(), -1.5708, 0.05);
  EXPECT_NEAR(lobes["lobes"][1]["angle"].get<double>(), 1.5708, 0.05);
  EXPECT_EQ(read_csv(d / "qgrid.csv").size(), 301u * 301u + 1u);
  const json grid = json::parse(slurp(d / "qgrid.json"));
  EXPECT_EQ(grid["values"].size(), 301u);
  EXPECT_EQ(grid["values"][0].size(), 301u);
  EXPECT_NE(slurp(d / "qgrid.gp").find("with image"), std::string::npos);
}

TEST(Cli, QFunctionQuarterTurnAndNoConditioning) {
  const fs::path d = fresh("qf2");
  ASSERT_EQ(run("--out " + d.string() + " qfunc --alpha 10 --theta 5pi --grid -15:15:31").code, 0);
  const json lobes = json::parse(slurp(d / "lobes.json"));
  ASSERT_EQ(lobes["lobes"].size(), 2u);
  EXPECT_NEAR(lobes["lobes"][0]["angle"].get<double>(), -0.7854, 0.05);
  EXPECT_NEAR(lobes["lobes"][1]["angle"].get<double>(), 0.7854, 0.05);

  ASSERT_EQ(run("--out " + d.string() + " qfunc --alpha 10 --theta 0 --grid -15:15:31").code, 0);
  const json single = json::parse(slurp(d / "lobes.json"));
  ASSERT_EQ(single["lobes"].size(), 1u);
  EXPECT_NEAR(single["lobes"][0]["angle"].get<double>(), 0.0, 0.01);
  EXPECT_TRUE(single["degenerate"].get<bool>());
}

TEST(Cli, QFunctionCutoffGuard) {
  EXPECT_EQ(run("--out " + fresh("guard").string() + " qfunc --cutoff 50").code, 4);
}

TEST(Cli, CatDiagnose) {
  const fs::path d = fresh("cat");
  const CliRun r = run("--out " + d.string() + " cat-diagnose --alpha 10 --theta 10pi");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(slurp(d / "cat.json"));
  EXPECT_EQ(j["lobe_count"].get<int>(), 2);
  EXPECT_EQ(json::parse(r.out), j);
}

TEST(Cli, UniversalityDefault) {
  const fs::path d = fresh("uni");
  ASSERT_EQ(run("--out " + d.string() + " universality").code, 0);
  const auto rows = read_csv(d / "scaling.csv");
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"alpha", "cutoff", "residual"}));
  const json s = json::parse(slurp(d / "summary.json"));
  const double e = s["exponent"].get<double>();
  EXPECT_GE(e, -3.5);
  EXPECT_LE(e, -2.5);
}

TEST(Cli, UniversalitySingleAlphaAndDropCubic) {
  const fs::path d = fresh("uni2");
  ASSERT_EQ(run("--out " + d.string() + " universality --alpha 8").code, 0);
  const json s = json::parse(slurp(d / "summary.json"));
  EXPECT_TRUE(s["exponent"].is_null());
  EXPECT_GT(s["points"][0]["residual"].get<double>(), 0.0);

  ASSERT_EQ(run("--out " + d.string() + " universality --drop-cubic").code, 0);
  const json dc = json::parse(slurp(d / "summary.json"));
  EXPECT_NEAR(dc["exponent"].get<double>(), -2.0, 0.2);
  EXPECT_EQ(dc["series"], "no-cubic");
}

TEST(Cli, UniversalityGuard) {
  EXPECT_EQ(run("--out " + fresh("uni3").string() + " universality --alpha 4,20").code, 4);
  EXPECT_EQ(run("--out " + fresh("uni3").string() + " universality --alpha 2,6").code, 3);
}

TEST(Cli, Params) {
  const CliRun r = run("params --tau 6.5064,219.918");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["kappa_hz"].get<double>(), 11.25e6, 1e-3);
  EXPECT_NEAR(j["interaction_times"][0]["seconds"].get<double>(), 9.2e-8, 0.1e-8);
  EXPECT_NEAR(j["interaction_times"][1]["seconds"].get<double>(), 3.1e-6, 0.05e-6);
  const CliRun plain = run("params --g 4.5MHz --omega 2pi*30MHz --delta 3.7699111843e7");
  EXPECT_NEAR(json::parse(plain.out)["kappa_hz"].get<double>(), 11.25e6, 1.0);
  EXPECT_EQ(run("params --delta 0").code, 3);
}

TEST(Cli, QuditTheta) {
  CliRun r = run("qudit-theta --n 2 --tolerance 0.01");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_TRUE(j["within_tolerance"].get<bool>());
  EXPECT_LE(j["table"][2]["cos"].get<double>(), -0.99);
  EXPECT_GE(j["table"][1]["cos"].get<double>(), 0.99);

  r = run("qudit-theta --n 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["theta"].get<double>(), 0.0);

  r = run("qudit-theta --n 20 --max-theta 500");
  EXPECT_EQ(r.code, 2);
  j = json::parse(r.out);
  EXPECT_EQ(j["flips"], json::array({2, 18}));
  EXPECT_EQ(j["table"].size(), 21u);
  EXPECT_EQ(j["table"][18]["target"].get<int>(), -1);
}

TEST(Cli, InvalidConfiguration) {
  EXPECT_EQ(run("").code, 3);
  EXPECT_EQ(run("ns-search --bogus").code, 3);
  EXPECT_EQ(run("qfunc --grid 1:2").code, 3);
  EXPECT_EQ(run("--format xml ns-search").code, 3);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ConfigFilePrecedence) {
  const fs::path d = fresh("conf");
  fs::create_directories(d);
  {
    std::ofstream f(d / "run.conf");
    f << "format=csv\n[ns-search]\nmax-tau=50\n";
  }
  const std::string base = "--config " + (d / "run.conf").string() + " --out " + d.string();
  ASSERT_EQ(run(base + " ns-search").code, 0);
  EXPECT_EQ(read_csv(d / "table1.csv").size(), 3u);
  EXPECT_FALSE(fs::exists(d / "table1.json"));
  ASSERT_EQ(run(base + " ns-search --max-tau 10").code, 0);
  EXPECT_EQ(read_csv(d / "table1.csv").size(), 2u);
}

TEST(Cli, ByteIdenticalReruns) {
  const std::vector<std::string> commands{"qfunc --alpha 6 --theta 6pi --grid -10:10:41",
                                          "ns-search --two-atom --tau1 30:40 --tau2 190:200",
                                          "ns-search", "universality --alpha 4,6,8"};
  for (const std::string& cmd : commands) {
    const fs::path a = fresh("det_a");
    const fs::path b = fresh("det_b");
    ASSERT_EQ(run("--out " + a.string() + " " + cmd).code, 0) << cmd;
    ASSERT_EQ(run("--out " + b.string() + " " + cmd).code, 0) << cmd;
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
      ++files;
      EXPECT_EQ(slurp(entry.path()), slurp(b / entry.path().filename())) << cmd << " " << entry.path();
    }
    EXPECT_GT(files, 0u);
  }
}

}  // namespace
