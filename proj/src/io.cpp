// Copyright 2026 The DGR Toolkit Authors
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

#include "dgr/io.hpp"

#include <fstream>
#include <sstream>

namespace dgr {

namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;  // blank
}

// Parses a line of single-space-separated base-10 integers.  Column
// numbers are 1-based.
std::vector<int> parse_int_line(const std::string& line, int line_number,
                                const char* what) {
  std::vector<int> values;
  std::size_t pos = 0;
  std::string body = line;
  if (!body.empty() && body.back() == '\r') body.pop_back();
  while (pos < body.size()) {
    std::size_t start = pos;
    if (body[pos] == '-') ++pos;
    while (pos < body.size() && body[pos] >= '0' && body[pos] <= '9') ++pos;
    if (pos == start || (body[start] == '-' && pos == start + 1)) {
      throw ParseError(std::string("expected integer in ") + what, line_number,
                       static_cast<int>(start) + 1);
    }
    values.push_back(std::stoi(body.substr(start, pos - start)));
    if (pos < body.size()) {
      if (body[pos] != ' ') {
        throw ParseError("expected single space separator", line_number,
                         static_cast<int>(pos) + 1);
      }
      ++pos;
      if (pos == body.size()) {
        throw ParseError("trailing separator", line_number,
                         static_cast<int>(pos));
      }
    }
  }
  if (values.empty()) {
    throw ParseError(std::string("empty ") + what, line_number, 1);
  }
  return values;
}

}  // namespace

Ruler parse_ruler_line(const std::string& line, int line_number) {
  std::vector<int> marks = parse_int_line(line, line_number, "ruler line");
  for (std::size_t i = 1; i < marks.size(); ++i) {
    if (marks[i] <= marks[i - 1]) {
      throw ParseError("ruler marks must be strictly ascending", line_number,
                       1);
    }
  }
  if (marks.front() < 0) {
    throw ParseError("negative ruler mark", line_number, 1);
  }
  return Ruler(marks);
}

std::vector<Ruler> parse_ruler_file(std::istream& in) {
  std::vector<Ruler> rulers;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_comment_or_blank(line)) continue;
    rulers.push_back(parse_ruler_line(line, line_number));
  }
  return rulers;
}

DgrSystem parse_dgr(std::istream& in) {
  std::string line;
  int line_number = 0;
  bool have_header = false;
  int i_count = 0, j_marks = 0, n_span = 0;
  std::vector<Ruler> rulers;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_comment_or_blank(line)) continue;
    if (!have_header) {
      std::vector<int> header = parse_int_line(line, line_number, "header");
      if (header.size() != 3) {
        throw ParseError("header must be \"I J n\"", line_number, 1);
      }
      i_count = header[0];
      j_marks = header[1];
      n_span = header[2];
      if (i_count < 0) {
        throw ParseError("negative ruler count in header", line_number, 1);
      }
      have_header = true;
      continue;
    }
    if (static_cast<int>(rulers.size()) == i_count) {
      throw ParseError("more ruler lines than header I", line_number, 1);
    }
    rulers.push_back(parse_ruler_line(line, line_number));
  }
  if (!have_header) {
    throw ParseError("missing \"I J n\" header", line_number + 1, 1);
  }
  if (static_cast<int>(rulers.size()) != i_count) {
    throw ParseError("expected " + std::to_string(i_count) +
                         " ruler lines, got " + std::to_string(rulers.size()),
                     line_number + 1, 1);
  }
  return DgrSystem(i_count, j_marks, n_span, std::move(rulers));
}

DgrSystem parse_dgr_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dgr(in);
}

DgrSystem parse_dgr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DgrError("cannot open " + path);
  return parse_dgr(in);
}

std::string emit_ruler(const Ruler& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.marks().size(); ++i) {
    if (i) os << ' ';
    os << r.marks()[i];
  }
  return os.str();
}

std::string emit_dgr(const DgrSystem& s) {
  std::ostringstream os;
  os << s.i_count() << ' ' << s.j_marks() << ' ' << s.n_span() << '\n';
  for (const Ruler& r : s.rulers()) os << emit_ruler(r) << '\n';
  return os.str();
}

void write_dgr_file(const std::string& path, const DgrSystem& s) {
  std::ofstream out(path);
  if (!out) throw DgrError("cannot write " + path);
  out << emit_dgr(s);
}

}  // namespace dgr
