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

#include "cuttle/analysis.hpp"

#include <cassert>
#include <stdexcept>

namespace cuttle {

namespace {

Int emptySlack(const PBConstraint& c) {
  Int s = -c.degree();
  for (const Term& t : c.terms()) s += t.coeff;
  return s;
}

// Slack of c under the trail prefix of entries with position < cutEnd.
Int prefixSlack(const PBConstraint& c, const Engine& e, int cutEnd) {
  Int s = -c.degree();
  for (const Term& t : c.terms()) {
    int v = t.lit.var();
    bool falsified = e.isAssignedVar(v) && e.positionOf(v) < cutEnd &&
                     e.value(t.lit) == LitValue::False;
    if (!falsified) s += t.coeff;
  }
  return s;
}

bool propagatesUnderPrefix(const PBConstraint& c, const Engine& e, int cutEnd) {
  Int s = prefixSlack(c, e, cutEnd);
  if (s.sign() < 0) return false;
  for (const Term& t : c.terms()) {
    int v = t.lit.var();
    bool free = !e.isAssignedVar(v) || e.positionOf(v) >= cutEnd;
    if (free && t.coeff > s) return true;
  }
  return false;
}

struct CoreResult {
  PBConstraint learned;
  AnalysisOutcome outcome = AnalysisOutcome::Asserting;
  int64_t steps = 0;
  ReduceStats weakening;
  int exitPosition = 0;  // remaining prefix is trail[0 .. exitPosition)
};

CoreResult analyzeCore(const Engine& e, int64_t conflictId,
                       const ReductionStrategy& strategy) {
  const auto& trail = e.trail();
  CoreResult res;
  res.learned = e.constraint(conflictId);
  PartialAssignment rho = e.snapshot();
  if (strategy.kind == ReductionKind::Clausal) {
    // Clausal analysis works on the clause extracted from the falsified
    // constraint: the disjunction of its falsified literals.
    std::vector<Term> clause;
    for (const Term& t : res.learned.terms())
      if (rho.isFalse(t.lit)) clause.push_back({t.lit, 1});
    res.learned = PBConstraint::fromCanonical(std::move(clause), 1);
  }

  int p = static_cast<int>(trail.size()) - 1;
  while (true) {
    if (emptySlack(res.learned).sign() < 0) {
      res.outcome = AnalysisOutcome::Infeasible;
      res.exitPosition = p + 1;
      return res;
    }
    // FUIP test: would the constraint propagate once every assignment of the
    // remaining prefix's deepest level is removed?
    int curLevel = p >= 0 ? trail[p].level : 0;
    if (curLevel >= 1 && propagatesUnderPrefix(res.learned, e, e.levelStart(curLevel))) {
      res.outcome = AnalysisOutcome::Asserting;
      res.exitPosition = p + 1;
      return res;
    }
    assert(p >= 0 && "analysis ran off the trail with a non-falsified constraint");

    const TrailEntry& entry = trail[p];
    if (entry.reason != kDecisionReason && res.learned.coeffOf(~entry.lit)) {
      const PBConstraint& reason = e.constraint(entry.reason);
      PBConstraint reduced =
          reduce(strategy, reason, res.learned, entry.lit, rho, &res.weakening);
      res.learned = resolve(res.learned, reduced, entry.lit);
      // Clause resolution treats clauses as literal sets; saturating the
      // resolvent of two clauses restores exactly the union clause.
      if (strategy.kind == ReductionKind::Clausal) res.learned = saturate(res.learned);
      ++res.steps;
      // Key invariant: the resolvent stays falsified once entry is removed.
      assert(prefixSlack(res.learned, e, p).sign() < 0);
    }
    rho.unassign(entry.lit.var());
    --p;
    assert(res.steps <= static_cast<int64_t>(trail.size()));
  }
}

int backjumpLevelFor(const PBConstraint& c, const Engine& e, int maxLevel) {
  for (int k = 0; k < maxLevel; ++k) {
    int cutEnd = e.levelStart(k + 1);
    if (propagatesUnderPrefix(c, e, cutEnd)) return k;
  }
  throw std::logic_error("computeBackjumpLevel: constraint is not asserting");
}

}  // namespace

bool isAsserting(const PBConstraint& c, const Engine& e) {
  int level = e.currentLevel();
  int cutEnd = level >= 1 ? e.levelStart(level) : 0;
  return propagatesUnderPrefix(c, e, cutEnd);
}

int computeBackjumpLevel(const PBConstraint& c, const Engine& e) {
  return backjumpLevelFor(c, e, e.currentLevel());
}

AnalysisResult analyze(const Engine& e, int64_t conflictId,
                       const AnalysisConfig& config) {
  if (e.cachedSlack(conflictId).sign() >= 0)
    throw std::logic_error("analyze: conflict constraint is not falsified");

  CoreResult core = analyzeCore(e, conflictId, config.strategy);
  AnalysisResult res;
  res.resolutionSteps = core.steps;
  res.literalsWeakened = core.weakening.weakened;
  res.weakenCandidates = core.weakening.candidates;
  res.learned = std::move(core.learned);
  res.outcome = core.outcome;
  if (res.outcome == AnalysisOutcome::Infeasible) {
    res.backjumpLevel = 0;
    return res;
  }

  if (config.lengthCap > 0 && res.learned.size() >= config.lengthCap &&
      config.strategy.kind != ReductionKind::Clausal) {
    // Too long: weaken towards the cap; keep the result only if it is still
    // asserting at the point where analysis stopped.
    PartialAssignment rho(e.numVars());
    const auto& trail = e.trail();
    for (int i = 0; i < core.exitPosition; ++i) rho.assign(trail[i].lit);
    std::optional<PBConstraint> shorter = weakenToCap(res.learned, rho, config.lengthCap);
    int exitLevel = core.exitPosition > 0 ? trail[core.exitPosition - 1].level : 0;
    bool ok = shorter.has_value() && exitLevel >= 1 &&
              propagatesUnderPrefix(*shorter, e, e.levelStart(exitLevel));
    if (ok) {
      res.learned = std::move(*shorter);
    } else {
      // Last resort: the clausal conflict, accepted regardless of length.
      CoreResult clausal = analyzeCore(e, conflictId, {ReductionKind::Clausal, {}});
      res.learned = std::move(clausal.learned);
      res.resolutionSteps += clausal.steps;
      res.usedClausalFallback = true;
      if (clausal.outcome == AnalysisOutcome::Infeasible) {
        res.outcome = AnalysisOutcome::Infeasible;
        res.backjumpLevel = 0;
        return res;
      }
    }
  }

  res.backjumpLevel = computeBackjumpLevel(res.learned, e);
  return res;
}

}  // namespace cuttle
