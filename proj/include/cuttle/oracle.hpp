//   Copyright 2026 The cuttle authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

#ifndef CUTTLE_ORACLE_HPP
#define CUTTLE_ORACLE_HPP

#include <optional>
#include <vector>

#include "cuttle/constraint.hpp"

namespace cuttle {

// Brute-force ground truth over all 2^n assignments. Enumeration follows
// lexicographic order on (x1, ..., xn) with 0 < 1, so the first model found
// is the lexicographically smallest. Throws std::invalid_argument when
// numVars exceeds maxVars.
struct ExhaustiveResult {
  bool sat = false;
  // Values indexed by variable (entry 0 unused); present iff sat.
  std::vector<int8_t> model;
};

ExhaustiveResult solveExhaustive(const std::vector<PBConstraint>& formula,
                                 int numVars, int maxVars = 20);

// True iff every total assignment satisfying all of F satisfies D.
bool implies(const std::vector<PBConstraint>& formula, const PBConstraint& d,
             int maxVars = 20);

// All satisfying total assignments as bit masks; bit (numVars - v) holds the
// value of variable v, matching the lexicographic enumeration order.
std::vector<uint32_t> allModels(const std::vector<PBConstraint>& formula,
                                int numVars, int maxVars = 20);

bool maskSatisfies(const PBConstraint& c, uint32_t mask, int numVars);

}  // namespace cuttle

#endif  // CUTTLE_ORACLE_HPP
