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

#include "cuttle/solver.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "cuttle/bench.hpp"
#include "cuttle/oracle.hpp"
#include "testutil.hpp"

using namespace cuttle;
using namespace cuttle::test;

namespace {

Problem problemOf(std::vector<PBConstraint> cs, int numVars) {
  Problem p;
  p.numVars = numVars;
  p.constraints = std::move(cs);
  return p;
}

const std::vector<AnalysisMode> kAllModes = {
    AnalysisMode::None, AnalysisMode::Clausal, AnalysisMode::Saturation,
    AnalysisMode::Division, AnalysisMode::Mir};

}  // namespace

TEST_CASE("two opposing units are unsatisfiable after one level-0 conflict") {
  Problem p = problemOf({pb({{1, 1}}, 1), pb({{1, -1}}, 1)}, 1);
  SolveOutcome out = solve(p, {});
  REQUIRE(out.status == Status::Unsat);
  REQUIRE(out.stats.conflicts == 1);
}

TEST_CASE("single-constraint problems get verified models") {
  Problem p = problemOf({pb({{2, -1}, {2, 2}, {3, 3}}, 4)}, 3);
  for (AnalysisMode m : kAllModes) {
    SolverConfig cfg;
    cfg.analysis = m;
    SolveOutcome out = solve(p, cfg);
    REQUIRE(out.status == Status::Sat);
    PartialAssignment rho(3);
    for (int v = 1; v <= 3; ++v) rho.set(v, (*out.model)[v] != 0);
    REQUIRE(satisfiedBy(p.constraints[0], rho));
  }
}

TEST_CASE("pigeonhole is unsatisfiable under every strategy") {
  Problem p = phpProblem(6, 5);
  REQUIRE(!solveExhaustive(phpProblem(4, 3).constraints, 12).sat);
  for (AnalysisMode m : kAllModes) {
    SolverConfig cfg;
    cfg.analysis = m;
    SolveOutcome out = solve(p, cfg);
    REQUIRE(out.status == Status::Unsat);
  }
}

TEST_CASE("decide follows the heuristics") {
  Problem p = problemOf({pb({{1, 1}, {1, 2}, {1, 3}}, 1)}, 3);
  SolverConfig fixed;
  fixed.heuristic = DecisionHeuristic::FixedOrder;
  Solver s(p, fixed);
  REQUIRE(!s.engine().propagateToFixpoint().has_value());
  REQUIRE(s.decide() == lit(-1));  // lowest free index, assigned false

  SolverConfig act;
  act.heuristic = DecisionHeuristic::Activity;
  Solver s2(p, act);
  REQUIRE(!s2.engine().propagateToFixpoint().has_value());
  REQUIRE(s2.decide() == lit(-1));  // all activities equal: lowest index
}

TEST_CASE("activity order bumps and ties") {
  ActivityOrder order(5);
  Engine e(5);
  REQUIRE(order.pickFree(e) == 1);  // ties broken by lowest index
  order.bump(5);
  REQUIRE(order.pickFree(e) == 5);  // single bumped variable wins
  order.bump(3);
  order.bump(3);
  REQUIRE(order.pickFree(e) == 3);
  e.assignDecision(lit(3));
  REQUIRE(order.pickFree(e) == 5);  // assigned variables are skipped
  order.decay();
  order.bump(2);  // one fresh bump outweighs older ones after decay
  REQUIRE(order.activity(2) > order.activity(5));
}

TEST_CASE("all five settings agree with the oracle on random instances") {
  Rng rng(909090);
  for (int round = 0; round < 40; ++round) {
    int n = static_cast<int>(rng.range(3, 12));
    Rng sub(rng.next());
    Problem p = randomPbProblem(sub, n, static_cast<int>(rng.range(2, 20)), 10);
    bool expect = solveExhaustive(p.constraints, n).sat;
    for (AnalysisMode m : kAllModes) {
      SolverConfig cfg;
      cfg.analysis = m;
      SolveOutcome out = solve(p, cfg);
      REQUIRE(out.status == (expect ? Status::Sat : Status::Unsat));
    }
  }
}

TEST_CASE("learned constraints are implied by the formula during search") {
  Rng rng(919191);
  for (int round = 0; round < 15; ++round) {
    int n = static_cast<int>(rng.range(4, 10));
    Rng sub(rng.next());
    Problem p = randomPbProblem(sub, n, static_cast<int>(rng.range(4, 16)), 8);
    SolveHooks hooks;
    std::vector<PBConstraint> learned;
    hooks.onLearned = [&](const PBConstraint& c) { learned.push_back(c); };
    SolverConfig cfg;
    cfg.analysis = AnalysisMode::Mir;
    solve(p, cfg, hooks);
    for (const PBConstraint& c : learned) REQUIRE(implies(p.constraints, c));
  }
}

TEST_CASE("identical config and seed reproduce identical statistics") {
  Rng rng(929292);
  Rng sub(rng.next());
  Problem p = randomPbProblem(sub, 12, 24, 12);
  int variant = 0;
  for (AnalysisMode m : kAllModes) {
    SolverConfig cfg;
    cfg.analysis = m;
    cfg.seed = 7;
    cfg.lubyRestarts = (variant % 2) == 1;
    cfg.maxLearned = (variant % 3) == 2 ? 8 : 0;
    cfg.weakening = (variant % 2) == 0 ? Weakening::AllAtOnce : Weakening::Iterative;
    ++variant;
    SolveOutcome a = solve(p, cfg);
    SolveOutcome b = solve(p, cfg);
    REQUIRE(a.status == b.status);
    REQUIRE(a.stats.decisions == b.stats.decisions);
    REQUIRE(a.stats.conflicts == b.stats.conflicts);
    REQUIRE(a.stats.propagations == b.stats.propagations);
    REQUIRE(a.stats.learnedCount == b.stats.learnedCount);
    REQUIRE(a.stats.learnedPropagatedAtLeastOnce == b.stats.learnedPropagatedAtLeastOnce);
    REQUIRE(a.stats.meanLearnedLength == b.stats.meanLearnedLength);
    REQUIRE(a.stats.weakenedFraction == b.stats.weakenedFraction);
  }
}

TEST_CASE("statistics stay internally consistent") {
  Rng rng(939393);
  Rng sub(rng.next());
  Problem p = randomPbProblem(sub, 10, 20, 10);
  SolveOutcome out = solve(p, {});
  REQUIRE(out.stats.learnedPropagatedAtLeastOnce <= out.stats.learnedCount);
  REQUIRE(out.stats.propagatingFraction() >= 0.0);
  REQUIRE(out.stats.propagatingFraction() <= 1.0);
  REQUIRE(out.stats.weakenedFraction >= 0.0);
  REQUIRE(out.stats.weakenedFraction <= 1.0);
  REQUIRE(out.stats.nodes() == out.stats.decisions + out.stats.conflicts);
}

TEST_CASE("conflict and node limits return unknown") {
  Problem p = phpProblem(7, 6);
  SolverConfig cfg;
  cfg.analysis = AnalysisMode::Clausal;
  cfg.conflictLimit = 5;
  SolveOutcome out = solve(p, cfg);
  REQUIRE(out.status == Status::Unknown);
  REQUIRE(out.stats.conflicts == 5);

  SolverConfig cfg2;
  cfg2.nodeLimit = 3;
  SolveOutcome out2 = solve(p, cfg2);
  REQUIRE(out2.status == Status::Unknown);
  REQUIRE(out2.stats.nodes() >= 3);
}

TEST_CASE("optimization by linear search proves optima") {
  Rng rng(949494);
  for (int round = 0; round < 10; ++round) {
    int n = static_cast<int>(rng.range(3, 8));
    Rng sub(rng.next());
    Problem p = randomPbProblem(sub, n, static_cast<int>(rng.range(2, 8)), 6);
    p.hasObjective = true;
    for (int v = 1; v <= n; ++v)
      p.objective.push_back({Int(sub.range(-5, 5)), Lit::pos(v)});

    // oracle: minimize by enumeration
    auto models = allModels(p.constraints, n);
    std::optional<Int> best;
    for (uint32_t mask : models) {
      Int val = 0;
      for (const RawTerm& t : p.objective)
        if ((mask >> (n - t.lit.var())) & 1u) val += t.coeff;
      if (!best || val < *best) best = val;
    }

    std::vector<Int> improvements;
    SolveHooks hooks;
    hooks.onImprovedObjective = [&](const Int& v) { improvements.push_back(v); };
    SolveOutcome out = solve(p, {}, hooks);
    if (!best) {
      REQUIRE(out.status == Status::Unsat);
      continue;
    }
    REQUIRE(out.status == Status::Sat);
    REQUIRE(out.optimumProven);
    REQUIRE(out.objectiveValue == *best);
    REQUIRE(!improvements.empty());
    for (size_t i = 1; i < improvements.size(); ++i)
      REQUIRE(improvements[i] < improvements[i - 1]);
    REQUIRE(improvements.back() == *best);
  }
}

TEST_CASE("restarts and database reduction keep answers correct") {
  Rng rng(959595);
  for (int round = 0; round < 12; ++round) {
    int n = static_cast<int>(rng.range(6, 12));
    Rng sub(rng.next());
    Problem p = randomPbProblem(sub, n, static_cast<int>(rng.range(8, 24)), 8);
    bool expect = solveExhaustive(p.constraints, n).sat;
    SolverConfig cfg;
    cfg.analysis = AnalysisMode::Division;
    cfg.lubyRestarts = true;
    cfg.maxLearned = 10;
    SolveOutcome out = solve(p, cfg);
    REQUIRE(out.status == (expect ? Status::Sat : Status::Unsat));
  }
}

TEST_CASE("scaling all constraints into big-integer range preserves answers") {
  // multiplying coefficients and degree by a constant keeps the 0-1 solution
  // set; the scaled run exercises the arbitrary-precision slack path
  Rng rng(969696);
  Int k = Int(1) * (1LL << 55);
  for (int round = 0; round < 10; ++round) {
    int n = static_cast<int>(rng.range(4, 10));
    Rng sub(rng.next());
    Problem p = randomPbProblem(sub, n, static_cast<int>(rng.range(4, 16)), 12);
    Problem scaled;
    scaled.numVars = n;
    for (const PBConstraint& c : p.constraints) {
      std::vector<std::pair<Lit, Int>> terms;
      for (const Term& t : c.terms()) terms.emplace_back(t.lit, t.coeff * k);
      scaled.constraints.push_back(
          PBConstraint::fromTerms(std::move(terms), c.degree() * k));
    }
    bool expect = solveExhaustive(p.constraints, n).sat;
    for (AnalysisMode m : {AnalysisMode::Saturation, AnalysisMode::Division,
                           AnalysisMode::Mir}) {
      SolverConfig cfg;
      cfg.analysis = m;
      SolveOutcome out = solve(scaled, cfg);
      REQUIRE(out.status == (expect ? Status::Sat : Status::Unsat));
    }
  }
}

TEST_CASE("malformed configs are rejected") {
  Problem p = problemOf({pb({{1, 1}}, 1)}, 1);
  SolverConfig bad;
  bad.capNumerator = 0;
  REQUIRE_THROWS_AS(solve(p, bad), std::invalid_argument);
  SolverConfig bad2;
  bad2.capNumerator = 21;
  bad2.capDenominator = 20;
  REQUIRE_THROWS_AS(solve(p, bad2), std::invalid_argument);
  SolverConfig bad3;
  bad3.conflictLimit = -2;
  REQUIRE_THROWS_AS(solve(p, bad3), std::invalid_argument);
}
