// Copyright 2026 The Authors.
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

// Runs the `ofl` binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "ofl/adversary.h"
#include "ofl/instance_io.h"
#include "test_support.h"

namespace ofl {
namespace {

using nlohmann::json;
using testing::Q;

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun ofl(const std::string& args) {
  const std::string cmd = std::string(OFL_BINARY) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class CliTest : public ::testing::Test {
 protected:
  std::string file(const std::string& name, const Instance& inst) {
    const auto path = std::filesystem::temp_directory_path() / ("ofl_cli_" + name + ".json");
    write_instance_file(path.string(), inst);
    paths_.push_back(path);
    return path.string();
  }
  void TearDown() override {
    for (const auto& p : paths_) std::filesystem::remove(p);
  }

 private:
  std::vector<std::filesystem::path> paths_;
};

TEST_F(CliTest, RunAndOpt) {
  const auto [i, j] = randomized_lower_bound_pair(Q(1, 100));
  const std::string path = file("j", j);
  const CliRun opt = ofl("opt --instance " + path);
  ASSERT_EQ(opt.exit_code, 0) << opt.out;
  EXPECT_EQ(json::parse(opt.out)["social_welfare"], "299/50");

  const CliRun det = ofl("run --mech alpha-statistic --alpha 1/4 --instance " + path);
  ASSERT_EQ(det.exit_code, 0) << det.out;
  EXPECT_TRUE(json::parse(det.out).contains("solution"));

  const CliRun rnd = ofl("run --mech equiprobable-lr --instance " + path + " --sample --seed 3");
  ASSERT_EQ(rnd.exit_code, 0) << rnd.out;
  const json out = json::parse(rnd.out);
  EXPECT_EQ(out["distribution"].size(), 2u);
  EXPECT_TRUE(out.contains("sample"));
  EXPECT_EQ(out["schema_version"], 1);
  EXPECT_EQ(ofl("run --mech equiprobable-lr --instance " + path + " --sample --seed 3").out,
            rnd.out);
}

TEST_F(CliTest, RatioOnTightInstance) {
  const std::string path =
      file("tight", uniform_statistic_tight_instance(10000, Q(1, 1000000)));
  const CliRun r = ofl("ratio --mech uniform-statistic --instance " + path);
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const json out = json::parse(r.out);
  EXPECT_NEAR(std::stod(out["ratio_decimal"].get<std::string>()), 1.522, 1e-3);
  EXPECT_EQ(out["schema_version"], 1);
}

TEST_F(CliTest, AuditExitCodes) {
  const auto [i, j] = single_facility_lower_bound_pair(Q(1, 100));
  for (const auto& [name, inst] : {std::pair{"i", i}, std::pair{"j", j}}) {
    const CliRun r = ofl("audit --mech lr-stronger-majority --instance " + file(name, inst));
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_EQ(json::parse(r.out)["verdict"], "NoDeviationFound");
  }
  const auto [ri, rj] = randomized_lower_bound_pair(Q(1, 100));
  const CliRun u = ofl("audit --mech uniform-statistic --universal --instance " + file("ri", ri));
  EXPECT_EQ(u.exit_code, 0) << u.out;
  // alpha-statistic refuses single-facility agents: a precondition failure.
  const CliRun bad = ofl("audit --mech alpha-statistic --alpha 1/4 --instance " + file("si", i));
  EXPECT_EQ(bad.exit_code, 1) << bad.out;
}

TEST_F(CliTest, Adversary) {
  const CliRun chain = ofl("adversary --mech alpha-statistic --alpha 268/1000 --family thm35 "
                        "--n 100 --eps 1/1000000");
  ASSERT_EQ(chain.exit_code, 0) << chain.out;
  EXPECT_EQ(json::parse(chain.out)["kind"], "RatioCertificate");
  const CliRun pair = ofl("adversary --mech lr-stronger-majority --family thm43 --eps 1/1000000");
  ASSERT_EQ(pair.exit_code, 0) << pair.out;
  EXPECT_GE(std::stod(json::parse(pair.out)["J"]["report"]["ratio_decimal"].get<std::string>()),
            2.99);
  const CliRun tight = ofl("adversary --mech uniform-statistic --family thm36 --n 1000 --eps 1/100");
  EXPECT_EQ(tight.exit_code, 0) << tight.out;
  const CliRun rnd = ofl("adversary --mech equiprobable-lr --family thm37 --eps 1/100");
  ASSERT_EQ(rnd.exit_code, 0) << rnd.out;
  EXPECT_EQ(json::parse(rnd.out)["J"]["report"]["optimal_welfare"], "299/50");
  EXPECT_EQ(ofl("adversary --mech equiprobable-lr --family thm99").exit_code, 1);
}

TEST_F(CliTest, SearchWritesInstance) {
  const auto out_path = std::filesystem::temp_directory_path() / "ofl_cli_search_out.json";
  const CliRun r = ofl("search --mech equiprobable-lr --seed 5 --budget 300 --out " +
                    out_path.string());
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const json report = json::parse(r.out);
  EXPECT_EQ(parse_instance(emit_instance(read_instance_file(out_path.string()))),
            parse_instance(report["instance"].dump()));
  EXPECT_EQ(ofl("search --mech equiprobable-lr --seed 5 --budget 300").out.substr(0, 200),
            r.out.substr(0, 200));
  std::filesystem::remove(out_path);
  EXPECT_EQ(ofl("search --mech uniform-statistic --mix mixed --budget 10").exit_code, 1);
}

TEST_F(CliTest, SweepAlphaMinimumNearTwoMinusSqrtThree) {
  const Chain chain = deterministic_lower_bound_chain(1000, Q(1, 1000000));
  const CliRun r = ofl("sweep-alpha --steps 50 --instance " + file("q", chain.instances.back()));
  ASSERT_EQ(r.exit_code, 0) << r.out;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "alpha,ratio_exact,ratio_decimal");
  int rows = 0;
  double best_ratio = 1e9, best_alpha = -1;
  while (std::getline(lines, line)) {
    ++rows;
    const auto c1 = line.find(','), c2 = line.rfind(',');
    const double alpha = Rational::parse(line.substr(0, c1)).to_double();
    const double ratio = Rational::parse(line.substr(c1 + 1, c2 - c1 - 1)).to_double();
    EXPECT_NEAR(ratio, std::stod(line.substr(c2 + 1)), 1e-6);
    // Largest alpha attaining the minimum.
    if (ratio <= best_ratio) {
      best_ratio = ratio;
      best_alpha = alpha;
    }
  }
  EXPECT_EQ(rows, 51);
  EXPECT_NEAR(best_alpha, 2 - std::sqrt(3.0), 1.0 / 100);
}

TEST_F(CliTest, Errors) {
  const std::string path = file("err", Instance::uniform({Q(0)}, Preference::both(), {Q(0), Q(2)}));
  EXPECT_EQ(ofl("ratio --mech median --instance " + path).exit_code, 1);
  const CliRun missing = ofl("ratio --mech alpha-statistic --instance " + path);
  EXPECT_EQ(missing.exit_code, 1);
  EXPECT_NE(missing.out.find("alpha"), std::string::npos);
  EXPECT_EQ(ofl("ratio --mech equiprobable-lr --instance /nonexistent.json").exit_code, 1);
  EXPECT_EQ(ofl("frobnicate").exit_code, 1);
  EXPECT_EQ(ofl("sweep-alpha --steps 0 --instance " + path).exit_code, 1);
}

}  // namespace
}  // namespace ofl
