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

#ifndef DGR_IO_HPP_
#define DGR_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "dgr/ruler.hpp"

namespace dgr {

// Text formats:
//   ruler file: one ruler per line, base-10 marks separated by single
//     spaces, ascending; lines starting with '#' are comments.
//   DGR file:   first non-comment line is "I J n"; exactly I ruler
//     lines follow.
// emit_* produce the canonical form; parse(emit(x)) == x bit-exactly.

class ParseError : public DgrError {
 public:
  ParseError(const std::string& message, int line, int column)
      : DgrError(message + " (line " + std::to_string(line) + ", column " +
                 std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Ruler parse_ruler_line(const std::string& line, int line_number = 1);
std::vector<Ruler> parse_ruler_file(std::istream& in);
DgrSystem parse_dgr(std::istream& in);
DgrSystem parse_dgr_string(const std::string& text);
DgrSystem parse_dgr_file(const std::string& path);

std::string emit_ruler(const Ruler& r);
std::string emit_dgr(const DgrSystem& s);
void write_dgr_file(const std::string& path, const DgrSystem& s);

}  // namespace dgr

#endif  // DGR_IO_HPP_
