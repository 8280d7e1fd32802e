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

#include <catch2/catch_amalgamated.hpp>

#include "cuttle/bench.hpp"
#include "testutil.hpp"

using namespace cuttle;
using namespace cuttle::test;

TEST_CASE("solveExhaustive returns the lexicographically smallest model") {
  auto r = solveExhaustive({pb({{1, 1}, {1, 2}}, 1), pb({{1, -1}, {1, -2}}, 1)}, 2);
  REQUIRE(r.sat);
  REQUIRE(r.model[1] == 0);
  REQUIRE(r.model[2] == 1);
}

TEST_CASE("solveExhaustive detects unsatisfiability") {
  REQUIRE(!solveExhaustive({pb({{1, 1}}, 1), pb({{1, -1}}, 1)}, 1).sat);
  REQUIRE(!solveExhaustive(phpProblem(4, 3).constraints, 12).sat);
}

TEST_CASE("solveExhaustive enforces the variable bound") {
  REQUIRE_THROWS_AS(solveExhaustive({}, 21), std::invalid_argument);
  REQUIRE_THROWS_AS(implies({pb({{1, 25}}, 1)}, pb({{1, 1}}, 1)),
                    std::invalid_argument);
}

TEST_CASE("implies") {
  PBConstraint f1 = pb({{1, 1}, {1, 2}, {2, 3}}, 2);
  PBConstraint f2 = pb({{1, 1}, {2, -3}, {1, 4}, {1, 5}}, 3);
  PBConstraint learned = pb({{3, 1}, {1, 4}, {1, 5}}, 3);
  REQUIRE(implies({f1, f2}, learned));
  REQUIRE(implies({f1, f2}, pb({{1, 9}}, 0)));  // tautology
  REQUIRE(!implies({}, pb({{1, 1}}, 1)));
}

TEST_CASE("allModels agrees with satisfiedBy") {
  Rng rng(424242);
  for (int round = 0; round < 50; ++round) {
    int n = static_cast<int>(rng.range(2, 8));
    std::vector<PBConstraint> f{randomConstraint(rng, n, 6),
                                randomConstraint(rng, n, 6)};
    auto models = allModels(f, n);
    size_t count = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      PartialAssignment rho(n);
      for (int v = 1; v <= n; ++v) rho.set(v, (mask >> (n - v)) & 1u);
      bool sat = satisfiedBy(f[0], rho) && satisfiedBy(f[1], rho);
      if (sat) {
        REQUIRE(models[count] == mask);
        ++count;
      }
    }
    REQUIRE(count == models.size());
  }
}
