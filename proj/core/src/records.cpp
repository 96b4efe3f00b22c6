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

#include <charconv>
#include <cmath>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "circulab/errors.hpp"
#include <nlohmann/json.hpp>

namespace circulab {

namespace {

using nlohmann::json;

constexpr const char* kColumns[] = {"study", "n", "trials", "statistic", "value", "aux", "seed", "timestamp"};

std::string percent_encode(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '%':
        out += "%25";
        break;
      case ';':
        out += "%3B";
        break;
      case '=':
        out += "%3D";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string percent_decode(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%') {
      if (i + 2 >= s.size()) throw ConfigError("truncated escape in aux field: " + std::string(s));
      const std::string_view code = s.substr(i + 1, 2);
      if (code == "25") out += '%';
      else if (code == "3B") out += ';';
      else if (code == "3D") out += '=';
      else throw ConfigError("bad escape in aux field: " + std::string(s));
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string encode_aux(const std::map<std::string, std::string>& aux) {
  std::string out;
  for (const auto& [k, v] : aux) {
    if (!out.empty()) out += ';';
    out += percent_encode(k) + "=" + percent_encode(v);
  }
  return out;
}

std::map<std::string, std::string> decode_aux(std::string_view text) {
  std::map<std::string, std::string> aux;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ConfigError("aux entry without '=': " + std::string(item));
    aux[percent_decode(item.substr(0, eq))] = percent_decode(item.substr(eq + 1));
    start = end + 1;
  }
  return aux;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw ConfigError("unterminated quoted CSV field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(std::string("field '") + what + "' is not an unsigned integer: " + s);
  }
  return v;
}

RecordValue parse_value(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (!s.empty() && ec == std::errc() && ptr == s.data() + s.size()) return v;
  return s;
}

json to_json(const ExperimentRecord& r) {
  json j;
  j["study"] = r.study;
  j["n"] = r.n;
  j["trials"] = r.trials;
  j["statistic"] = r.statistic;
  if (const double* d = std::get_if<double>(&r.value)) {
    if (std::isfinite(*d)) {
      j["value"] = *d;
    } else {
      j["value"] = format_real(*d);
    }
  } else {
    j["value"] = std::get<std::string>(r.value);
  }
  j["aux"] = r.aux;
  j["seed"] = r.seed;
  j["timestamp"] = r.timestamp;
  return j;
}

ExperimentRecord from_json(const json& j) {
  ExperimentRecord r;
  try {
    r.study = j.at("study").get<std::string>();
    r.n = j.at("n").get<std::uint64_t>();
    r.trials = j.at("trials").get<std::uint64_t>();
    r.statistic = j.at("statistic").get<std::string>();
    const json& v = j.at("value");
    if (v.is_number()) {
      r.value = v.get<double>();
    } else {
      const auto s = v.get<std::string>();
      if (s == "inf" || s == "-inf" || s == "nan" || s == "-nan") {
        r.value = parse_value(s);
      } else {
        r.value = s;
      }
    }
    r.aux = j.value("aux", std::map<std::string, std::string>{});
    r.seed = j.at("seed").get<std::uint64_t>();
    r.timestamp = j.value("timestamp", std::string{});
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed JSON record: ") + e.what());
  }
  return r;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw ConfigError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

std::string_view to_string(OutputFormat format) { return format == OutputFormat::kCsv ? "csv" : "json"; }

bool equivalent(const ExperimentRecord& a, const ExperimentRecord& b) {
  return a.study == b.study && a.n == b.n && a.trials == b.trials && a.statistic == b.statistic &&
         a.value == b.value && a.aux == b.aux && a.seed == b.seed;
}

bool equivalent(const std::vector<ExperimentRecord>& a, const std::vector<ExperimentRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equivalent(a[i], b[i])) return false;
  }
  return true;
}

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw InternalError("to_chars failed");
  return std::string(buf, ptr);
}

std::string format_value(const RecordValue& value) {
  if (const double* d = std::get_if<double>(&value)) return format_real(*d);
  return std::get<std::string>(value);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string serialize_records(const std::vector<ExperimentRecord>& records, OutputFormat format,
                              bool include_header) {
  if (format == OutputFormat::kJson) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  if (include_header) {
    for (std::size_t i = 0; i < std::size(kColumns); ++i) out << (i ? "," : "") << kColumns[i];
    out << "\n";
  }
  for (const auto& r : records) {
    out << csv_quote(r.study) << ',' << r.n << ',' << r.trials << ',' << csv_quote(r.statistic) << ','
        << csv_quote(format_value(r.value)) << ',' << csv_quote(encode_aux(r.aux)) << ',' << r.seed << ','
        << csv_quote(r.timestamp) << "\n";
  }
  return out.str();
}

std::vector<ExperimentRecord> parse_records(std::string_view text, OutputFormat format) {
  std::vector<ExperimentRecord> records;
  if (format == OutputFormat::kJson) {
    json arr;
    try {
      arr = json::parse(text);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ConfigError("JSON records must be an array");
    for (const auto& j : arr) records.push_back(from_json(j));
    return records;
  }

  const auto rows = csv_rows(text);
  if (rows.empty()) return records;
  const auto& header = rows.front();
  if (header.size() != std::size(kColumns)) throw ConfigError("unexpected CSV header");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] != kColumns[i]) throw ConfigError("unexpected CSV column '" + header[i] + "'");
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != std::size(kColumns)) throw ConfigError("CSV row " + std::to_string(i) + " has wrong arity");
    ExperimentRecord r;
    r.study = row[0];
    r.n = parse_u64(row[1], "n");
    r.trials = parse_u64(row[2], "trials");
    r.statistic = row[3];
    r.value = parse_value(row[4]);
    r.aux = decode_aux(row[5]);
    r.seed = parse_u64(row[6], "seed");
    r.timestamp = row[7];
    records.push_back(std::move(r));
  }
  return records;
}

void append_records_atomically(const std::filesystem::path& path, const std::vector<ExperimentRecord>& records,
                               OutputFormat format) {
  std::string content;
  const bool exists = std::filesystem::exists(path) && std::filesystem::file_size(path) > 0;
  if (format == OutputFormat::kJson) {
    std::vector<ExperimentRecord> all;
    if (exists) all = parse_records(read_file(path), format);
    all.insert(all.end(), records.begin(), records.end());
    content = serialize_records(all, format);
  } else if (exists) {
    content = read_file(path);
    if (!content.empty() && content.back() != '\n') content += '\n';
    content += serialize_records(records, format, /*include_header=*/false);
  } else {
    content = serialize_records(records, format);
  }

  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move results into " + path.string() + ": " + ec.message());
  }
}

std::vector<ExperimentRecord> read_records(const std::filesystem::path& path, OutputFormat format) {
  return parse_records(read_file(path), format);
}

}  // namespace circulab
