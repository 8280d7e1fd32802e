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

#include "cuttle/oracle.hpp"

#include <stdexcept>

namespace cuttle {

namespace {

void checkBound(int numVars, int maxVars) {
  if (numVars < 0 || numVars > maxVars)
    throw std::invalid_argument("oracle: variable count " + std::to_string(numVars) +
                                " exceeds bound " + std::to_string(maxVars));
  if (maxVars > 30) throw std::invalid_argument("oracle: bound too large");
}

}  // namespace

bool maskSatisfies(const PBConstraint& c, uint32_t mask, int numVars) {
  Int sum = 0;
  for (const Term& t : c.terms()) {
    bool bit = (mask >> (numVars - t.lit.var())) & 1u;
    if (t.lit.negated() ? !bit : bit) sum += t.coeff;
  }
  return sum >= c.degree();
}

ExhaustiveResult solveExhaustive(const std::vector<PBConstraint>& formula,
                                 int numVars, int maxVars) {
  checkBound(numVars, maxVars);
  uint64_t space = 1ull << numVars;
  for (uint64_t m = 0; m < space; ++m) {
    bool ok = true;
    for (const PBConstraint& c : formula) {
      if (!maskSatisfies(c, static_cast<uint32_t>(m), numVars)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ExhaustiveResult r;
      r.sat = true;
      r.model.assign(numVars + 1, 0);
      for (int v = 1; v <= numVars; ++v)
        r.model[v] = static_cast<int8_t>((m >> (numVars - v)) & 1u);
      return r;
    }
  }
  return {};
}

bool implies(const std::vector<PBConstraint>& formula, const PBConstraint& d,
             int maxVars) {
  int numVars = d.maxVar();
  for (const PBConstraint& c : formula)
    if (c.maxVar() > numVars) numVars = c.maxVar();
  checkBound(numVars, maxVars);
  uint64_t space = 1ull << numVars;
  for (uint64_t m = 0; m < space; ++m) {
    bool premise = true;
    for (const PBConstraint& c : formula) {
      if (!maskSatisfies(c, static_cast<uint32_t>(m), numVars)) {
        premise = false;
        break;
      }
    }
    if (premise && !maskSatisfies(d, static_cast<uint32_t>(m), numVars)) return false;
  }
  return true;
}

std::vector<uint32_t> allModels(const std::vector<PBConstraint>& formula,
                                int numVars, int maxVars) {
  checkBound(numVars, maxVars);
  std::vector<uint32_t> out;
  uint64_t space = 1ull << numVars;
  for (uint64_t m = 0; m < space; ++m) {
    bool ok = true;
    for (const PBConstraint& c : formula) {
      if (!maskSatisfies(c, static_cast<uint32_t>(m), numVars)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<uint32_t>(m));
  }
  return out;
}

}  // namespace cuttle
