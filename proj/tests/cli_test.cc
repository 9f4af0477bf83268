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

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "genconf/json_io.h"
#include "test_util.h"

namespace genconf {
namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult RunCli(const std::string& args) {
  const std::string cmd = std::string(GENCONF_CLI) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("genconf_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const Json& j) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << j.dump(2);
    return path;
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, DcrEvalOnReducedExample) {
  const auto path = Write("reduced235.json", ToJson(testing::Reduced235()));
  RunResult r = RunCli("dcr-eval \"e[{1};2,3,4,5]\" " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-2/3\n");
}

TEST_F(CliTest, ComplexWithOrbits) {
  RunResult r = RunCli("complex 2 7 --orbits");
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("dimension"), 2);
  EXPECT_EQ(j.at("vertices").size(), 630u);
  EXPECT_EQ(j.at("orbits").at("0").size(), 1u);
  EXPECT_EQ(j.at("orbits").at("1").size(), 2u);
  EXPECT_EQ(j.at("orbits").at("2").size(), 1u);
}

TEST_F(CliTest, SelfTest) {
  RunResult r = RunCli("selftest --m 2 --n 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli("").code, 2);
  EXPECT_EQ(RunCli("frobnicate").code, 2);
  EXPECT_EQ(RunCli("complex 2 7 --unknown-flag").code, 2);
  EXPECT_EQ(RunCli("complex 2").code, 2);
  EXPECT_EQ(RunCli("stabilizer 2 7 --type third").code, 2);
}

TEST_F(CliTest, DomainErrors) {
  EXPECT_EQ(RunCli("complex 2 4").code, 1);
  EXPECT_EQ(RunCli("dcr-eval \"e[{1};2,3,4]\" " +
                Write("q.json", ToJson(testing::Reduced235())))
                .code,
            1);
  EXPECT_EQ(RunCli("normalize " + Path("missing.json")).code, 1);
  std::ofstream(Path("bad.json")) << "{not json";
  EXPECT_EQ(RunCli("check " + Path("bad.json")).code, 1);
}

TEST_F(CliTest, NormalizeRoundTrip) {
  const auto path = Write("q.json", ToJson(SampleGeneric(2, 6, Space::kProjective, 3)));
  RunResult r = RunCli("normalize " + path + " --out " + Path("norm.json"));
  ASSERT_EQ(r.code, 0);
  RunResult checked = RunCli("check " + Path("norm.json"));
  ASSERT_EQ(checked.code, 0);
  EXPECT_EQ(Json::parse(checked.out).at("kind"), "normalization");
  std::ifstream in(Path("norm.json"));
  Json norm = Json::parse(in);
  const auto reduced = Write("reduced.json", norm.at("reduced"));
  Json info = Json::parse(RunCli("check " + reduced).out);
  EXPECT_EQ(info.at("reduced"), true);
  EXPECT_EQ(info.at("generic"), true);
}

TEST_F(CliTest, EmittedDocumentsAreReadable) {
  ASSERT_EQ(RunCli("complex 2 6 --orbits --out " + Path("cx.json")).code, 0);
  ASSERT_EQ(RunCli("orbits 2 7 --out " + Path("orbits.json")).code, 0);
  ASSERT_EQ(RunCli("stabilizer 3 7 --type second --out " + Path("stab.json")).code, 0);
  const auto map = Write("map.json", ToJson(RandomTameMap(2, 7, true, 1)));
  ASSERT_EQ(RunCli("recover " + map + " 2 7 --out " + Path("rec.json")).code, 0);
  for (const char* name : {"cx.json", "orbits.json", "stab.json", "rec.json"}) {
    RunResult r = RunCli("check " + Path(name));
    EXPECT_EQ(r.code, 0) << name;
  }
  Json cx = Json::parse(RunCli("check " + Path("cx.json")).out);
  EXPECT_EQ(cx.at("invalid_edges"), 0);
}

TEST_F(CliTest, RecoverReportsHiddenSigma) {
  TameMap f = RandomTameMap(3, 7, false, 5);
  const auto map = Write("map.json", ToJson(f));
  RunResult r = RunCli("recover " + map + " 3 7 --seed 2 --samples 2");
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(PermutationFromJson(j.at("sigma")), f.sigma());
  ASSERT_EQ(j.at("samples").size(), 2u);
  for (const Json& s : j.at("samples")) EXPECT_EQ(s.at("matches"), true);
  EXPECT_EQ(RunCli("recover " + map + " 2 7").code, 1);
}

TEST_F(CliTest, StabilizerOrder) {
  RunResult r = RunCli("stabilizer 2 7 --type second");
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("stabilizer").size(), 2u);
  EXPECT_EQ(j.at("ordered_orbit_size").get<std::uint64_t>() * 2, 5040u);
}

TEST_F(CliTest, Deterministic) {
  const auto map = Write("map.json", ToJson(RandomTameMap(2, 7, false, 9)));
  EXPECT_EQ(RunCli("recover " + map + " 2 7 --seed 4").out,
            RunCli("recover " + map + " 2 7 --seed 4").out);
  EXPECT_EQ(RunCli("orbits 3 7").out, RunCli("orbits 3 7").out);
}

}  // namespace
}  // namespace genconf
