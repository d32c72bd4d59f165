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

#ifndef DGR_CONSTRUCTIONS_HPP_
#define DGR_CONSTRUCTIONS_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dgr/ruler.hpp"

namespace dgr {

// Audit trail for one construction call.  The materialized system is
// re-verified before it leaves the construction, so a trace always
// describes a valid system whose header matches the stated bound.
struct ConstructionTrace {
  std::string rule_name;
  std::vector<std::array<int, 3>> input_headers;   // (I, J, n) per input
  std::array<int, 3> output_header{};
  std::optional<std::string> case_taken;
  std::map<std::string, int> parameters;

  nlohmann::json to_json() const;
};

struct Constructed {
  DgrSystem system;
  ConstructionTrace trace;
};

// Side-by-side composition: sb translated past sa.
// (a,J,na) + (b,J,nb) -> (a+b, J, na+nb).
Constructed concat_compose(const DgrSystem& sa, const DgrSystem& sb);

// Extension construction: sa has J-mark rulers, sb has (J-1)-mark
// rulers, sa.n >= sb.n.  Produces (a+b, J, na+nb+b).  sb may be the
// empty (0, J-1, 0) system, in which case sa is returned unchanged.
Constructed thm3_extend(const DgrSystem& sa, const DgrSystem& sb);

// Doubling variant of the extension: from (a, J-1, m) to
// (2a, J, 2m+2a).  Layout: U_i = (Y_i + a) u {2m+a+i},
// V_i = (Y_i + a + m) u {i}.
Constructed thm3_double(const DgrSystem& sb);

// Merges sb into a gap of sa: (a,J,na) with gap width w plus (b,J,nb)
// gives (a+b, J, na+nb-w).  The gap must come from find_gaps(sa); the
// system is pre-reflected when t > n-w-t.  The trace records which of
// the two placement cases fired.
Constructed gap_merge(const DgrSystem& sa, Gap gap, const DgrSystem& sb);

// Doubling through a gap: (a,J,n) with gap width w gives
// (2a, J, 2n-2w).  Second copies are reflections; low marks are placed
// at 2n-2w+1-x (the index range stated for them in the source
// construction re-selects already-placed marks, so the completed
// reflection is used instead).
Constructed gap_double(const DgrSystem& sa, Gap gap);

// From a J-mark Golomb ruler A with marks in [1,n], max(A) = n, builds
// a (2, J-1, n+1) system out of A and A+1.
Constructed shift_pair(const Ruler& a_ruler, int n);

// Singer's construction as a plain Golomb ruler (marks start at 0),
// plus the modulus q^2+q+1 it lives under.
std::pair<Ruler, int> singer_ruler(int q);

}  // namespace dgr

#endif  // DGR_CONSTRUCTIONS_HPP_
