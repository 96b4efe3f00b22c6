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

#include "circulab/records.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "circulab/errors.hpp"

namespace circulab {
namespace {

namespace fs = std::filesystem;

std::vector<ExperimentRecord> sample_records() {
  ExperimentRecord a;
  a.study = "singularity-exact";
  a.n = 9;
  a.trials = 512;
  a.statistic = "probability";
  a.value = std::string("31/256");
  a.aux = {{"divisor_counts", "[1:0,3:56,9:8]"}, {"odd;key", "a=b%c"}, {"quote", "say \"hi\", twice\nnewline"}};
  a.seed = 0;
  a.timestamp = "2026-01-01T00:00:00Z";
  ExperimentRecord b;
  b.study = "esd-convergence";
  b.n = 1024;
  b.trials = 100;
  b.statistic = "discrepancy";
  b.value = 0.1 + 0.2;
  b.seed = std::numeric_limits<std::uint64_t>::max();
  b.timestamp = "2026-01-01T00:00:01Z";
  ExperimentRecord c = b;
  c.statistic = "tiny";
  c.value = 5e-324;
  ExperimentRecord d = b;
  d.statistic = "label";
  d.value = std::string("1e5x");
  return {a, b, c, d};
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("circulab_records_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST(Records, RoundTripBothFormats) {
  const auto records = sample_records();
  for (auto format : {OutputFormat::kCsv, OutputFormat::kJson}) {
    const auto text = serialize_records(records, format);
    const auto back = parse_records(text, format);
    EXPECT_EQ(back, records) << to_string(format);
    EXPECT_EQ(serialize_records(back, format), text);
  }
}

TEST(Records, CsvLayout) {
  const auto text = serialize_records({sample_records()[1]}, OutputFormat::kCsv);
  EXPECT_EQ(text.substr(0, text.find('\n')), "study,n,trials,statistic,value,aux,seed,timestamp");
  EXPECT_NE(text.find("esd-convergence,1024,100,discrepancy,0.30000000000000004,,18446744073709551615,"),
            std::string::npos);
}

TEST(Records, RationalsStayExactStrings) {
  const auto back = parse_records(serialize_records(sample_records(), OutputFormat::kCsv), OutputFormat::kCsv);
  ASSERT_TRUE(std::holds_alternative<std::string>(back[0].value));
  EXPECT_EQ(std::get<std::string>(back[0].value), "31/256");
}

TEST(Records, NonFiniteValuesSurvive) {
  ExperimentRecord r = sample_records()[1];
  r.value = std::numeric_limits<double>::infinity();
  for (auto format : {OutputFormat::kCsv, OutputFormat::kJson}) {
    const auto back = parse_records(serialize_records({r}, format), format);
    ASSERT_EQ(back.size(), 1u);
    EXPECT_EQ(format_value(back[0].value), format_value(r.value));
  }
}

TEST(Records, EquivalenceIgnoresTimestamp) {
  auto a = sample_records();
  auto b = a;
  b[0].timestamp = "2030-05-05T00:00:00Z";
  EXPECT_TRUE(equivalent(a, b));
  b[0].seed = 1;
  EXPECT_FALSE(equivalent(a, b));
}

TEST(Records, MalformedInput) {
  EXPECT_THROW(parse_records("a,b\n1,2\n", OutputFormat::kCsv), ConfigError);
  EXPECT_THROW(parse_records("{", OutputFormat::kJson), ConfigError);
  EXPECT_THROW(parse_records("{}", OutputFormat::kJson), ConfigError);
  EXPECT_THROW(parse_output_format("xml"), ConfigError);
}

TEST(Records, TimestampShape) {
  const std::string t = utc_timestamp();
  ASSERT_EQ(t.size(), 20u);
  EXPECT_EQ(t[10], 'T');
  EXPECT_EQ(t.back(), 'Z');
}

TEST_F(TempDir, AppendAccumulatesRows) {
  const auto records = sample_records();
  for (auto format : {OutputFormat::kCsv, OutputFormat::kJson}) {
    const fs::path path = dir_ / (std::string("out.") + std::string(to_string(format)));
    append_records_atomically(path, {records[0], records[1]}, format);
    append_records_atomically(path, {records[2], records[3]}, format);
    EXPECT_EQ(read_records(path, format), records);
    for (const auto& entry : fs::directory_iterator(dir_)) {
      EXPECT_EQ(entry.path().string().find(".tmp"), std::string::npos);
    }
  }
}

TEST_F(TempDir, UnwritableDestinationFails) {
  EXPECT_THROW(append_records_atomically(dir_ / "missing" / "out.csv", sample_records(), OutputFormat::kCsv),
               std::runtime_error);
}

}  // namespace
}  // namespace circulab
