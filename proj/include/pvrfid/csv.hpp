/*
 * Copyright (c) 2026, pvrfid contributors.
 * All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pvrfid/errors.hpp"

// Small CSV helpers shared by all modules. All emitted files are
// comma-delimited with a '.' decimal separator, a mandatory header row and
// LF line endings.

namespace pvrfid {

// %.12g keeps enough digits that a parse/format cycle is idempotent.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(trim(cur));
  return fields;
}

inline double parse_double_field(const std::string& text, int line_no,
                                 const std::string& column) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size())
      throw validation_error("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw validation_error("line " + std::to_string(line_no) +
                           ": cannot parse '" + text + "' as number for column " +
                           column);
  }
}

struct CsvRow {
  int line_no = 0;
  std::vector<std::string> fields;
};

// Reads a whole CSV file: checks the exact header, returns the data rows.
// Blank lines are skipped. Throws validation_error with line numbers.
inline std::vector<CsvRow> read_csv_rows(std::istream& in,
                                         const std::string& expected_header) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (!have_header) {
      if (t != expected_header)
        throw validation_error("line " + std::to_string(line_no) +
                               ": expected header '" + expected_header +
                               "', got '" + t + "'");
      have_header = true;
      continue;
    }
    rows.push_back({line_no, split_csv_line(t)});
  }
  if (!have_header)
    throw validation_error("empty file: expected header '" + expected_header + "'");
  return rows;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open input file: " + path);
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open output file: " + path);
  return out;
}

} // namespace pvrfid
