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

#ifndef DGR_TESTS_GENERATORS_HPP_
#define DGR_TESTS_GENERATORS_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "dgr/ruler.hpp"

namespace dgr_gen {

// Random valid (i, j, *) system by randomized greedy placement; the
// span starts at the floor i*j plus the requested slack and grows until
// an attempt succeeds.  Slack > 0 tends to leave gaps in the union.
inline dgr::DgrSystem random_system(std::mt19937& rng, int i, int j,
                                    int slack = 0) {
  int n = i * j + slack;
  while (true) {
    for (int attempt = 0; attempt < 30; ++attempt) {
      std::set<int> used;
      std::vector<dgr::Ruler> rulers;
      bool ok = true;
      for (int r = 0; r < i && ok; ++r) {
        bool placed = false;
        for (int tries = 0; tries < 60 && !placed; ++tries) {
          std::vector<int> marks;
          std::set<int> diffs;
          int stuck = 0;
          while (static_cast<int>(marks.size()) < j && stuck < 40) {
            int m = std::uniform_int_distribution<int>(1, n)(rng);
            if (used.count(m) ||
                std::find(marks.begin(), marks.end(), m) != marks.end()) {
              ++stuck;
              continue;
            }
            bool clash = false;
            std::set<int> fresh;
            for (int x : marks) {
              int d = std::abs(m - x);
              if (diffs.count(d) || !fresh.insert(d).second) {
                clash = true;
                break;
              }
            }
            if (clash) {
              ++stuck;
              continue;
            }
            diffs.insert(fresh.begin(), fresh.end());
            marks.push_back(m);
          }
          if (static_cast<int>(marks.size()) == j) {
            for (int m : marks) used.insert(m);
            rulers.push_back(dgr::Ruler(marks));
            placed = true;
          }
        }
        ok = placed;
      }
      if (ok) {
        return dgr::DgrSystem(i, j, n, std::move(rulers));
      }
    }
    ++n;
  }
}

}  // namespace dgr_gen

#endif  // DGR_TESTS_GENERATORS_HPP_
