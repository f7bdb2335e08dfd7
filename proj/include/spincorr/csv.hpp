// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace spincorr {

/// Shortest-safe representation: 17 significant digits, '.' decimal point,
/// independent of the global locale.
std::string format_double(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(const std::vector<double>& values);
};

/// Header line then one line per row, ',' separated, '\n' terminated.
void emit_csv(const CsvTable& table, std::ostream& out);
/// Throws IoError when the destination cannot be written.
void emit_csv(const CsvTable& table, const std::filesystem::path& destination);

/// Reads back a file written by emit_csv (numeric cells only).
std::vector<std::vector<double>> parse_csv_numbers(const std::string& text, bool skip_header = true);

/// key=value sidecar describing one CLI run.
struct RunManifest {
  std::vector<std::pair<std::string, std::string>> entries;

  void set(const std::string& key, const std::string& value);
  std::string str() const;
};

}  // namespace spincorr
