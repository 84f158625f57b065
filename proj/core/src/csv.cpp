// Copyright 2026 The dddepth authors.
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

#include "ddd/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ddd/error.hpp"

namespace ddd {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_cell(const std::string& raw, std::size_t line_no, std::size_t col_no) {
  std::string cell = trimmed(raw);
  if (cell.empty()) {
    throw ParseError("empty cell at line " + std::to_string(line_no) + ", column " +
                         std::to_string(col_no),
                     line_no, col_no);
  }
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("non-numeric cell '" + cell + "' at line " + std::to_string(line_no) +
                         ", column " + std::to_string(col_no),
                     line_no, col_no);
  }
  if (std::isnan(value) || std::isinf(value)) {
    throw ParseError("non-finite value at line " + std::to_string(line_no) + ", column " +
                         std::to_string(col_no),
                     line_no, col_no);
  }
  return value;
}

}  // namespace

DataMatrix read_csv_stream(std::istream& in, bool has_header) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> labels;
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
    std::vector<std::string> fields = split_fields(line);
    if (has_header && line_no == 1) {
      for (const auto& f : fields) labels.push_back(trimmed(f));
      cols = fields.size();
      continue;
    }
    if (cols == 0) {
      cols = fields.size();
    } else if (fields.size() != cols) {
      throw ParseError("ragged row: expected " + std::to_string(cols) + " fields, got " +
                           std::to_string(fields.size()) + " at line " + std::to_string(line_no),
                       line_no);
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      values.push_back(parse_cell(fields[c], line_no, c + 1));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("no data rows", line_no == 0 ? 1 : line_no);
  DataMatrix out(rows, cols, std::move(values));
  out.set_column_labels(std::move(labels));
  return out;
}

DataMatrix read_csv(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_csv_stream(in, has_header);
}

std::string write_ddd_csv(const std::vector<DddRecord>& records) {
  std::string out = "index,ddd,band,outside";
  std::size_t dim = records.empty() ? 0 : records.front().point.size();
  for (std::size_t j = 0; j < dim; ++j) {
    out += ",x" + std::to_string(j);
  }
  out += "\n";
  char buf[64];
  for (const auto& r : records) {
    out += std::to_string(r.index);
    std::snprintf(buf, sizeof(buf), ",%.17g", r.ddd);
    out += buf;
    std::snprintf(buf, sizeof(buf), ",%.17g", r.band_halfwidth);
    out += buf;
    out += r.outside ? ",1" : ",0";
    for (double c : r.point) {
      std::snprintf(buf, sizeof(buf), ",%.17g", c);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace ddd
