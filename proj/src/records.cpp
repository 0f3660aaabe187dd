// Copyright 2026 The qndsim Authors
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

#include "qndsim/records.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qndsim/error.hpp"

namespace qnd {

using nlohmann::json;

namespace {

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorKind::input, what); }

double parse_number(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) bad_input("not a number: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_input(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad_input(std::string("field '") + key + "' has the wrong type");
  }
}

double number_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_input(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_null()) return NAN;
  if (!v.is_number()) bad_input(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

void write_json(std::string& out, const json& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_number(x) : "null";
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(k).dump();
        out += pretty ? ": " : ":";
        write_json(out, v, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        newline(depth + 1);
        write_json(out, j[i], indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, ptr);
}

json rounded(const json& j) {
  switch (j.type()) {
    case json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) return nullptr;
      return parse_number(format_number(x));
    }
    case json::value_t::object: {
      json out = json::object();
      for (const auto& [k, v] : j.items()) out[k] = rounded(v);
      return out;
    }
    case json::value_t::array: {
      json out = json::array();
      for (const auto& v : j) out.push_back(rounded(v));
      return out;
    }
    default:
      return j;
  }
}

std::string render_table(const Table& t) {
  std::string out = "# ";
  write_json(out, t.metadata, -1, 0);
  out += '\n';
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

Table parse_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Table t;
  if (!std::getline(in, line) || !line.starts_with("# ")) bad_input("table lacks a metadata line");
  t.metadata = json::parse(line.substr(2), nullptr, false);
  if (t.metadata.is_discarded() || !t.metadata.is_object()) bad_input("table metadata is not a JSON object");
  if (!std::getline(in, line) || line.empty()) bad_input("table lacks a column header");
  for (auto name : split(line, ',')) t.columns.emplace_back(name);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != t.columns.size()) bad_input("table row has the wrong number of columns");
    std::vector<double> row;
    row.reserve(cells.size());
    for (auto c : cells) row.push_back(parse_number(c));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::io, "write failed for " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string render_json(const json& j) {
  std::string out;
  write_json(out, j, 2, 0);
  out += '\n';
  return out;
}

json to_json(const Peak& p) {
  return {{"phonon_index", p.phonon_index}, {"center", p.center}, {"height", p.height},
          {"width", p.width},               {"weight", p.weight}, {"resolved", p.resolved}};
}

Peak peak_from_json(const json& j) {
  Peak p;
  p.phonon_index = field<int>(j, "phonon_index");
  p.center = number_field(j, "center");
  p.height = number_field(j, "height");
  p.width = number_field(j, "width");
  p.weight = j.contains("weight") ? number_field(j, "weight") : 0.0;
  p.resolved = j.contains("resolved") ? field<bool>(j, "resolved") : true;
  if (p.phonon_index < 0 || !std::isfinite(p.center)) bad_input("peak record is invalid");
  return p;
}

json to_json(const SpectrumMetadata& m) {
  return {{"chi", m.chi},
          {"nu_a", m.nu_a},
          {"dt", m.dt},
          {"window", m.window},
          {"zero_pad_factor", m.zero_pad_factor},
          {"samples", m.samples},
          {"peak_formula_used", m.peak_formula_used}};
}

json to_json(const PhononDistribution& d) {
  json comps = json::array();
  for (const auto& c : d.components) {
    comps.push_back({{"center", c.center},
                     {"amplitude", c.amplitude},
                     {"half_width", c.half_width},
                     {"area", c.area()}});
  }
  return {{"source", to_string(d.source)},
          {"probabilities", d.probabilities},
          {"mean", d.mean()},
          {"residual", d.residual},
          {"components", comps}};
}

Table spectrum_table(const SpectrumResult& s, const json& extra_metadata) {
  Table t;
  t.metadata = extra_metadata.is_object() ? extra_metadata : json::object();
  t.metadata["spectrum"] = to_json(s.metadata);
  json peaks = json::array();
  for (const auto& p : s.peaks) peaks.push_back(to_json(p));
  t.metadata["peaks"] = peaks;
  t.columns = {"omega", "S"};
  t.rows.reserve(s.frequencies.size());
  for (std::size_t i = 0; i < s.frequencies.size(); ++i) t.rows.push_back({s.frequencies[i], s.values[i]});
  return t;
}

SpectrumResult spectrum_from_table(const Table& t) {
  if (t.columns != std::vector<std::string>{"omega", "S"}) bad_input("spectrum table needs columns omega,S");
  if (t.rows.size() < 3) bad_input("spectrum table has too few rows");
  SpectrumResult s;
  for (const auto& r : t.rows) {
    s.frequencies.push_back(r[0]);
    s.values.push_back(r[1]);
  }
  for (std::size_t i = 1; i < s.frequencies.size(); ++i) {
    if (!(s.frequencies[i] > s.frequencies[i - 1])) bad_input("spectrum frequencies must ascend");
  }
  if (!t.metadata.contains("peaks") || !t.metadata["peaks"].is_array()) {
    bad_input("spectrum metadata lacks a peaks list");
  }
  for (const auto& p : t.metadata["peaks"]) s.peaks.push_back(peak_from_json(p));
  if (t.metadata.contains("spectrum")) {
    const json& m = t.metadata["spectrum"];
    s.metadata.chi = number_field(m, "chi");
    s.metadata.nu_a = number_field(m, "nu_a");
    s.metadata.dt = number_field(m, "dt");
    s.metadata.window = number_field(m, "window");
    s.metadata.zero_pad_factor = field<int>(m, "zero_pad_factor");
    s.metadata.samples = field<std::size_t>(m, "samples");
    s.metadata.peak_formula_used = field<std::string>(m, "peak_formula_used");
  }
  return s;
}

}  // namespace qnd
