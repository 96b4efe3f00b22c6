// Copyright 2026 The circulab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circulab_cli/cli.hpp"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "circulab/records.hpp"

namespace circulab::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, SingularityExactPrintsRational) {
  const Result r = invoke({"singularity", "exact", "--n", "3"});
  EXPECT_EQ(r.code, kOk);
  const auto records = parse_records(r.out, OutputFormat::kCsv);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(std::get<std::string>(records[0].value), "1/4");
}

TEST(Cli, WitnessAlternatingSigns) {
  const Result r = invoke({"singularity", "witness", "--signs", "+-+-"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("+-+-,4,true,\"[1,4]\""), std::string::npos) << r.out;
  const Result j = invoke({"singularity", "witness", "--signs", "+-+-", "--format", "json"});
  EXPECT_NE(j.out.find("\"singular\": true"), std::string::npos) << j.out;
}

TEST(Cli, BoundsTotientForm) {
  const Result r = invoke({"singularity", "bounds", "--n", "9"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("odd_bound_totient_form,17/64"), std::string::npos) << r.out;
}

TEST(Cli, SpectrumCsvAndJson) {
  const Result r = invoke({"spectrum", "--n", "4", "--seed", "3", "--ensemble", "complex-gaussian"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  const Result again = invoke({"spectrum", "--n", "4", "--seed", "3", "--ensemble", "complex-gaussian"});
  EXPECT_EQ(r.out, again.out);
  const Result j = invoke({"spectrum", "--n", "2", "--seed", "3", "--format", "json"});
  EXPECT_EQ(j.code, kOk);
  EXPECT_NE(j.out.find("\"re\""), std::string::npos);
}

TEST(Cli, SeedIsMandatoryForStochasticCommands) {
  for (const auto& cmd : std::vector<std::vector<std::string>>{{"spectrum", "--n", "4"},
                                                               {"esd", "--n", "8"},
                                                               {"gaussian", "--n", "8"},
                                                               {"hermitian", "--n", "8"},
                                                               {"extremes", "--n", "8"},
                                                               {"covariance", "--n", "8", "--trials", "4"},
                                                               {"singularity", "mc", "--n", "8"},
                                                               {"singularity", "per-root", "--n", "40"}}) {
    const Result r = invoke(cmd);
    EXPECT_EQ(r.code, kConfigError) << cmd[0];
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
  }
  EXPECT_EQ(invoke({"singularity", "per-root", "--n", "12"}).code, kOk);
}

TEST(Cli, UnknownFlagsAndValuesRejected) {
  EXPECT_EQ(invoke({"singularity", "exact", "--n", "3", "--verbose"}).code, kConfigError);
  EXPECT_EQ(invoke({"esd", "--n", "8", "--seed", "1", "--format", "xml"}).code, kConfigError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kConfigError);
  EXPECT_EQ(invoke({}).code, kConfigError);
  EXPECT_EQ(invoke({"esd", "--n", "8", "--seed", "1", "--ensemble", "hermitian"}).code, kConfigError);
  EXPECT_EQ(invoke({"singularity", "exact", "--n", "40"}).code, kConfigError);
  EXPECT_EQ(invoke({"singularity", "witness", "--signs", "+x"}).code, kConfigError);
  EXPECT_EQ(invoke({"esd", "--n", "0", "--seed", "1"}).code, kConfigError);
}

TEST(Cli, RuntimeErrorOnUnwritableOutput) {
  const Result r = invoke({"singularity", "bounds", "--n", "9", "--output", "/nonexistent-dir/x.csv"});
  EXPECT_EQ(r.code, kRuntimeError);
}

TEST(Cli, StudiesRunAndAreThreadIndependent) {
  for (const auto& base : std::vector<std::vector<std::string>>{
           {"esd", "--n", "16,32", "--trials", "5", "--seed", "4"},
           {"esd", "--n", "16,32", "--seed", "4", "--single-trajectory"},
           {"gaussian", "--n", "16", "--trials", "5", "--seed", "4"},
           {"hermitian", "--n", "16", "--trials", "5", "--seed", "4"},
           {"extremes", "--n", "16", "--trials", "5", "--seed", "4", "--kind", "gumbel-beta"},
           {"covariance", "--n", "16", "--trials", "50", "--seed", "4", "--k", "0,3"},
           {"singularity", "mc", "--n", "10", "--trials", "500", "--seed", "4"},
           {"singularity", "per-root", "--n", "12", "--k", "1,4"}}) {
    auto one = base;
    one.insert(one.end(), {"--threads", "1"});
    auto many = base;
    many.insert(many.end(), {"--threads", "4"});
    const Result a = invoke(one);
    const Result b = invoke(many);
    ASSERT_EQ(a.code, kOk) << base[0] << ": " << a.err;
    ASSERT_EQ(b.code, kOk) << base[0] << ": " << b.err;
    EXPECT_TRUE(equivalent(parse_records(a.out, OutputFormat::kCsv), parse_records(b.out, OutputFormat::kCsv)))
        << base[0];
  }
}

TEST(Cli, SweepRunsConfigFile) {
  const auto dir = std::filesystem::temp_directory_path() / "circulab_cli_sweep";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto config = dir / "sweep.json";
  const auto output = dir / "out.csv";
  std::ofstream(config) << R"([{"study": "singularity-exact", "n_list": [3, 4], "output_path": ")"
                        << output.string() << R"("},
                                {"study": "hermitian-law", "n_list": [8], "trials": 3, "seed": 2}])";
  const Result r = invoke({"sweep", "--config", config.string(), "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(parse_records(r.out, OutputFormat::kJson).size(), 4u);
  EXPECT_EQ(read_records(output, OutputFormat::kCsv).size(), 2u);

  std::ofstream(config) << R"({"study": "hermitian-law", "n_list": [8], "seed": 1, "ensemble": "rademacher"})";
  EXPECT_EQ(invoke({"sweep", "--config", config.string()}).code, kConfigError);
  EXPECT_EQ(invoke({"sweep", "--config", (dir / "absent.json").string()}).code, kConfigError);
  std::filesystem::remove_all(dir);
}

TEST(CliHelp, ListsEverySubcommandAndFlag) {
  const Result r = invoke({"--help"});
  ASSERT_EQ(r.code, kOk);
  for (const auto& name : subcommand_names()) EXPECT_NE(r.out.find("\n" + name + "\n"), std::string::npos) << name;
  for (const auto& action : singularity_actions()) {
    EXPECT_NE(r.out.find("circulab singularity " + action), std::string::npos) << action;
  }
  const auto flags = registered_flags();
  EXPECT_GT(flags.size(), 40u);
  for (const auto& [path, flag] : flags) {
    // Each flag appears in the help section that belongs to its subcommand.
    const std::string header = path.find(' ') == std::string::npos ? "\n" + path + "\n" : "circulab " + path + " ";
    const auto start = r.out.find(header);
    ASSERT_NE(start, std::string::npos) << path;
    EXPECT_NE(r.out.find(flag, start), std::string::npos) << path << " " << flag;
  }
}

TEST(CliHelp, ImplementedSetMatchesDocumentedSet) {
  std::set<std::string> leaf_paths;
  for (const auto& [path, flag] : registered_flags()) leaf_paths.insert(path);
  std::set<std::string> expected;
  for (const auto& name : subcommand_names()) {
    if (name != "singularity") expected.insert(name);
  }
  for (const auto& action : singularity_actions()) expected.insert("singularity " + action);
  EXPECT_EQ(leaf_paths, expected);
}

TEST(CliProcess, ExitCodesFromBinary) {
  auto status = [](const std::string& args) {
    const int raw = std::system((std::string(CIRCULAB_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("singularity exact --n 3"), 0);
  EXPECT_EQ(status("esd --n 8"), 1);
  EXPECT_EQ(status("singularity bounds --n 9 --output /nonexistent-dir/x.csv"), 2);
}

}  // namespace
}  // namespace circulab::cli
