// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincorr/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "spincorr/errors.hpp"

namespace spincorr {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void CsvTable::add_row(const std::vector<double>& values) {
  std::vector<std::string> row;
  row.reserve(values.size());
  for (double v : values) row.push_back(format_double(v));
  rows.push_back(std::move(row));
}

namespace {

void write_line(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace

void emit_csv(const CsvTable& table, std::ostream& out) {
  write_line(table.header, out);
  for (const auto& row : table.rows) write_line(row, out);
}

void emit_csv(const CsvTable& table, const std::filesystem::path& destination) {
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + destination.string() + " for writing");
  emit_csv(table, file);
  file.flush();
  if (!file) throw IoError("failed writing " + destination.string());
}

std::vector<std::vector<double>> parse_csv_numbers(const std::string& text, bool skip_header) {
  std::vector<std::vector<double>> out;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first && skip_header) {
      first = false;
      continue;
    }
    first = false;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = std::min(line.find(',', pos), line.size());
      double v = 0.0;
      const auto res = std::from_chars(line.data() + pos, line.data() + comma, v);
      if (res.ec != std::errc()) throw ArgumentError("non-numeric CSV cell in: " + line);
      row.push_back(v);
      pos = comma + 1;
    }
    out.push_back(std::move(row));
  }
  return out;
}

void RunManifest::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries.emplace_back(key, value);
}

std::string RunManifest::str() const {
  std::string s;
  for (const auto& [k, v] : entries) s += k + "=" + v + "\n";
  return s;
}

}  // namespace spincorr
