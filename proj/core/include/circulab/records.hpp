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

#ifndef CIRCULAB_RECORDS_HPP_
#define CIRCULAB_RECORDS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace circulab {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_output_format(std::string_view text);
std::string_view to_string(OutputFormat format);

// A real number or an exact token (rational "p/q", boolean, integer list).
using RecordValue = std::variant<double, std::string>;

// One result row. (study, n, trials, seed) determine reproduction; the
// timestamp is volatile and ignored by equivalent().
struct ExperimentRecord {
  std::string study;
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  std::string statistic;
  RecordValue value = 0.0;
  std::map<std::string, std::string> aux;
  std::uint64_t seed = 0;
  std::string timestamp;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

// Equality ignoring the timestamp field.
bool equivalent(const ExperimentRecord& a, const ExperimentRecord& b);
bool equivalent(const std::vector<ExperimentRecord>& a, const std::vector<ExperimentRecord>& b);

// Shortest decimal that parses back to the same double.
std::string format_real(double value);
std::string format_value(const RecordValue& value);

// Current UTC time, ISO 8601.
std::string utc_timestamp();

// CSV: header row then one record per line, RFC 4180 quoting. Column order
// study,n,trials,statistic,value,aux,seed,timestamp; aux is "k=v;k=v".
// JSON: array of objects with the same field names, aux as an object.
std::string serialize_records(const std::vector<ExperimentRecord>& records, OutputFormat format,
                              bool include_header = true);
std::vector<ExperimentRecord> parse_records(std::string_view text, OutputFormat format);

// Appends to `path` by writing a sibling temporary file and renaming it
// over the target, so readers never observe a partial table.
void append_records_atomically(const std::filesystem::path& path, const std::vector<ExperimentRecord>& records,
                               OutputFormat format);
std::vector<ExperimentRecord> read_records(const std::filesystem::path& path, OutputFormat format);

}  // namespace circulab

#endif  // CIRCULAB_RECORDS_HPP_
