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

#include "cuttle/engine.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace cuttle;
using namespace cuttle::test;

TEST_CASE("assign records level and updates only affected slack caches") {
  Engine e(4);
  int64_t c = e.addConstraint(pb({{2, -1}, {2, 2}, {3, 3}}, 4), Origin::Input);
  REQUIRE(!e.propagateToFixpoint().has_value());
  Int before = e.cachedSlack(c);

  e.assignDecision(lit(-1));  // decide x1 = 0
  REQUIRE(e.levelOf(1) == 1);
  REQUIRE(e.currentLevel() == 1);
  // ~x1 is satisfied, nothing falsified in c
  REQUIRE(e.cachedSlack(c) == before);

  e.backjumpTo(0);
  e.assignDecision(lit(1));  // x1 := 1 falsifies the 2~x1 term
  REQUIRE(e.cachedSlack(c) == before - 2);

  // assigning a variable foreign to every constraint changes no cache
  e.assignDecision(lit(4));
  REQUIRE(e.cachedSlack(c) == before - 2);
  e.checkSlackCache();
}

TEST_CASE("propagation to fixpoint on the worked example") {
  Engine e(3);
  int64_t c = e.addConstraint(pb({{2, -1}, {2, 2}, {3, 3}}, 4), Origin::Input);
  REQUIRE(!e.propagateToFixpoint().has_value());
  e.assignDecision(lit(1));
  auto conflict = e.propagateToFixpoint();
  REQUIRE(!conflict.has_value());
  REQUIRE(e.value(lit(2)) == LitValue::True);
  REQUIRE(e.value(lit(3)) == LitValue::True);
  REQUIRE(e.reasonOf(2) == c);
  REQUIRE(e.reasonOf(3) == c);
  REQUIRE(e.propagations() == 2);
}

TEST_CASE("assigning an already assigned variable is an error") {
  Engine e(2);
  e.assignDecision(lit(1));
  REQUIRE_THROWS_AS(e.assign(lit(-1), kDecisionReason), std::logic_error);
}

TEST_CASE("tautologies are never stored") {
  Engine e(2);
  PBConstraint t = weaken(pb({{3, 1}, {2, 2}}, 2), lit(1));
  REQUIRE(t.isTautology());
  REQUIRE_THROWS_AS(e.addConstraint(t, Origin::Input), std::invalid_argument);
}

TEST_CASE("immediate conflict at level zero") {
  Engine e(1);
  e.addConstraint(pb({{1, 1}}, 1), Origin::Input);
  int64_t bad = e.addConstraint(pb({{1, -1}}, 1), Origin::Input);
  auto conflict = e.propagateToFixpoint();
  REQUIRE(conflict.has_value());
  REQUIRE(*conflict == bad);
  REQUIRE(e.currentLevel() == 0);
}

TEST_CASE("no propagation when every coefficient is within slack") {
  Engine e(2);
  e.addConstraint(pb({{1, 1}, {1, 2}}, 1), Origin::Input);
  REQUIRE(!e.propagateToFixpoint().has_value());
  REQUIRE(e.assignedCount() == 0);
}

TEST_CASE("backjump restores caches exactly") {
  Engine e(6);
  int64_t c1 = e.addConstraint(pb({{2, -1}, {2, 2}, {3, 3}}, 4), Origin::Input);
  int64_t c2 = e.addConstraint(pb({{1, 4}, {1, 5}, {1, 6}}, 2), Origin::Input);
  REQUIRE(!e.propagateToFixpoint().has_value());
  Int s1 = e.cachedSlack(c1), s2 = e.cachedSlack(c2);

  e.backjumpTo(0);  // no-op at level 0
  REQUIRE(e.cachedSlack(c1) == s1);

  e.assignDecision(lit(-4));
  REQUIRE(!e.propagateToFixpoint().has_value());  // propagates x5, x6
  e.assignDecision(lit(1));
  REQUIRE(!e.propagateToFixpoint().has_value());
  REQUIRE(e.currentLevel() == 2);

  e.backjumpTo(e.currentLevel());  // no-op
  REQUIRE(e.assignedCount() == 6);

  e.backjumpTo(1);
  REQUIRE(e.assignedCount() == 3);  // exactly the level-<=1 prefix
  for (const TrailEntry& t : e.trail()) REQUIRE(t.level <= 1);
  e.checkSlackCache();

  e.backjumpTo(0);
  REQUIRE(e.cachedSlack(c1) == s1);
  REQUIRE(e.cachedSlack(c2) == s2);
  e.checkSlackCache();
}

TEST_CASE("fuzzed trail replay keeps the incremental cache exact") {
  Rng rng(31337);
  for (int round = 0; round < 60; ++round) {
    int n = static_cast<int>(rng.range(3, 10));
    Engine e(n);
    e.setDebugChecks(true);
    int m = static_cast<int>(rng.range(2, 12));
    for (int i = 0; i < m; ++i)
      e.addConstraint(randomConstraint(rng, n, 8), Origin::Input);
    for (int step = 0; step < 30; ++step) {
      long long action = rng.range(0, 3);
      if (action == 0 && e.currentLevel() > 0) {
        e.backjumpTo(static_cast<int>(rng.range(0, e.currentLevel() - 1)));
      } else {
        std::vector<int> freeVars;
        for (int v = 1; v <= n; ++v)
          if (!e.isAssignedVar(v)) freeVars.push_back(v);
        if (freeVars.empty()) break;
        int v = freeVars[static_cast<size_t>(
            rng.range(0, static_cast<long long>(freeVars.size()) - 1))];
        e.assignDecision(Lit::make(v, rng.coin()));
      }
      auto conflict = e.propagateToFixpoint();
      e.checkSlackCache();
      if (conflict) {
        if (e.currentLevel() == 0) break;
        e.backjumpTo(e.currentLevel() - 1);
        e.checkSlackCache();
      }
    }
  }
}

TEST_CASE("fixpoint leaves no missed propagation and acyclic reasons") {
  Rng rng(555);
  for (int round = 0; round < 40; ++round) {
    int n = static_cast<int>(rng.range(3, 10));
    Engine e(n);
    for (int i = 0; i < 8; ++i)
      e.addConstraint(randomConstraint(rng, n, 6), Origin::Input);
    auto conflict = e.propagateToFixpoint();
    if (!conflict && e.assignedCount() < static_cast<size_t>(n)) {
      for (int v = 1; v <= n; ++v)
        if (!e.isAssignedVar(v)) {
          e.assignDecision(Lit::make(v, rng.coin()));
          break;
        }
      conflict = e.propagateToFixpoint();
    }
    if (!conflict) {
      PartialAssignment rho = e.snapshot();
      for (int64_t id = 0; id < e.dbSize(); ++id) {
        Int s = e.cachedSlack(id);
        for (const Term& t : e.constraint(id).terms()) {
          if (rho.isFree(t.lit)) REQUIRE(t.coeff <= s);
        }
      }
    }
    // every propagated entry's reason propagates it at assignment time:
    // under the trail prefix before the entry, the reason is not falsified
    // and the literal's coefficient exceeds the slack (so all falsified
    // literals of the reason sit earlier on the trail)
    for (const TrailEntry& t : e.trail()) {
      if (t.reason == kDecisionReason) continue;
      PartialAssignment prefix(e.numVars());
      for (int i = 0; i < t.position; ++i) prefix.assign(e.trail()[i].lit);
      const PBConstraint& reason = e.constraint(t.reason);
      Int s = slack(reason, prefix);
      REQUIRE(s.sign() >= 0);
      REQUIRE(prefix.isFree(t.lit));
      REQUIRE(*reason.coeffOf(t.lit) > s);
    }
  }
}

TEST_CASE("big coefficients escalate without losing exactness") {
  Engine e(3);
  Int huge = Int::fromString("4611686018427387904");  // 2^62
  std::vector<std::pair<Lit, Int>> terms{{lit(1), huge}, {lit(2), huge}, {lit(3), 1}};
  int64_t c = e.addConstraint(
      PBConstraint::fromTerms(std::move(terms), huge + 1), Origin::Input);
  REQUIRE(!e.propagateToFixpoint().has_value());
  REQUIRE(e.cachedSlack(c) == huge + huge + 1 - (huge + 1));
  e.assignDecision(lit(-1));
  auto conflict = e.propagateToFixpoint();
  REQUIRE(!conflict.has_value());
  // x2 must be set: without it at most huge falls short of degree huge+1
  REQUIRE(e.value(lit(2)) == LitValue::True);
  e.checkSlackCache();
}
