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

#include "matroid_arena/catalog.h"
#include "matroid_arena/json_io.h"

#ifndef MARENA_CLI_PATH
#error "MARENA_CLI_PATH must name the CLI binary"
#endif

namespace marena {
namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("marena_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::string Catalog(const std::string& name) {
    return Write(name + ".json", MatroidSpecToJson(CatalogSpec(name)).dump());
  }

  static CliRun Exec(const std::string& args) {
    const std::string cmd = std::string(MARENA_CLI_PATH) + " " + args +
                            " 2>/dev/null";
    CliRun run;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return run;
    char buffer[4096];
    std::size_t got;
    while ((got = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
      run.out.append(buffer, got);
    }
    const int status = ::pclose(pipe);
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, Chroma) {
  const CliRun k4 = Exec("chroma --matroid " + Catalog("K4"));
  EXPECT_EQ(k4.exit_code, 0);
  EXPECT_EQ(Json::parse(k4.out)["chromaticNumber"], 2);
  const CliRun u13 = Exec("chroma --matroid " + Catalog("U1_3"));
  EXPECT_EQ(Json::parse(u13.out)["chromaticNumber"], 3);
}

TEST_F(CliTest, InputErrorsExitTwo) {
  const std::string loop = Write(
      "loop.json", R"({"type":"graphic","vertices":2,"edges":[[0,0],[0,1]]})");
  EXPECT_EQ(Exec("chroma --matroid " + loop).exit_code, 2);
  EXPECT_EQ(Exec("chroma --matroid " + Write("bad.json", "{")).exit_code, 2);
  EXPECT_EQ(Exec("chroma").exit_code, 2);
  EXPECT_EQ(Exec("no-such-command").exit_code, 2);
}

TEST_F(CliTest, WCover) {
  const CliRun ok = Exec("wcover --matroid " + Catalog("K4") + " --k 2");
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(Json::parse(ok.out)["parts"].size(), 2u);
  const CliRun bad = Exec("wcover --matroid " + Catalog("U1_3") + " --k 2");
  EXPECT_EQ(bad.exit_code, 1);
  const Json witness = Json::parse(bad.out)["witness"];
  EXPECT_EQ(witness["A"], Json::parse("[0,1,2]"));
  EXPECT_EQ(witness["supply"], 2);
}

TEST_F(CliTest, PlayWritesTranscript) {
  const std::string out = (dir_ / "t.json").string();
  const CliRun alice =
      Exec("play --matroid " + Catalog("U1_2") + " --k 2 --out " + out);
  EXPECT_EQ(alice.exit_code, 0);
  EXPECT_EQ(ReadJsonFile(out)["result"], "alice");
  EXPECT_EQ(Exec("play --matroid " + Catalog("U1_3") + " --k 2").exit_code, 1);
  EXPECT_EQ(Exec("play --matroid " + Catalog("K4") + " --k 2 --bob random")
                .exit_code,
            2);
  const CliRun seeded = Exec("play --matroid " + Catalog("K4") +
                          " --k 2 --bob random --seed 7");
  EXPECT_EQ(seeded.exit_code, 0);
}

TEST_F(CliTest, Verify) {
  const CliRun alice = Exec("verify --matroid " + Catalog("U1_2") + " --k 2");
  EXPECT_EQ(alice.exit_code, 0);
  EXPECT_EQ(Json::parse(alice.out)["winner"], "alice");
  const CliRun bob =
      Exec("verify --matroid " + Catalog("U1_2") + " --k 1 --mode minimax");
  EXPECT_EQ(bob.exit_code, 1);
  EXPECT_EQ(Json::parse(bob.out)["winner"], "bob");
  EXPECT_EQ(Exec("verify --matroid " + Catalog("K5") + " --k 3").exit_code, 2);
}

TEST_F(CliTest, ExchangeCheckAndListColor) {
  const CliRun check =
      Exec("exchange-check --matroid " + Catalog("K4") + " --exhaustive");
  EXPECT_EQ(check.exit_code, 0);
  EXPECT_EQ(Json::parse(check.out)["failed"], 0);
  const std::string lists = Write("lists.json", R"({"lists":[[1,2],[2,3]]})");
  const CliRun colored =
      Exec("list-color --matroid " + Catalog("U1_2") + " --lists " + lists);
  EXPECT_EQ(colored.exit_code, 0);
  EXPECT_EQ(Json::parse(colored.out)["W"], Json::parse("[[1],[2]]"));
}

}  // namespace
}  // namespace marena
