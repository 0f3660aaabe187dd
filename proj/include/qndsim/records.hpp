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

// Serialization of command outputs.
//
// Tables are CSV with a metadata line and a one-line column header:
//
//   # {"command":"spectrum","config":{...},...}
//   omega,S
//   1.25,543.2
//
// Structured records are JSON. Every number in either format is written
// with at most 12 significant digits, so identical inputs give identical
// bytes and re-serializing a parsed file reproduces it exactly.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qndsim/statistics.hpp"

namespace qnd {

/// Shortest form of x rounded to 12 significant digits; "nan", "inf" and
/// "-inf" for non-finite values.
std::string format_number(double x);

/// Copy of j with every floating-point number rounded to 12 significant
/// digits and non-finite numbers replaced by null.
nlohmann::json rounded(const nlohmann::json& j);

struct Table {
  nlohmann::json metadata = nlohmann::json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string render_table(const Table& t);
Table parse_table(const std::string& text);  // throws ErrorKind::input

void write_text(const std::filesystem::path& path, const std::string& text);  // ErrorKind::io
std::string read_text(const std::filesystem::path& path);                     // ErrorKind::io

std::string render_json(const nlohmann::json& j);

nlohmann::json to_json(const Peak& p);
Peak peak_from_json(const nlohmann::json& j);  // throws ErrorKind::input
nlohmann::json to_json(const SpectrumMetadata& m);
nlohmann::json to_json(const PhononDistribution& d);

/// Spectrum table with the peaks and spectrum metadata embedded in the
/// header, plus any extra metadata (config echo, formulas) supplied.
Table spectrum_table(const SpectrumResult& s, const nlohmann::json& extra_metadata);

/// Inverse of spectrum_table. Throws ErrorKind::input on malformed content.
SpectrumResult spectrum_from_table(const Table& t);

}  // namespace qnd
