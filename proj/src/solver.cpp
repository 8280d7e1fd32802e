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

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace cuttle {

namespace {

double wallNow() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

// Luby restart sequence (as in MiniSat).
double luby(double y, int64_t x) {
  int64_t size, seq;
  for (size = 1, seq = 0; size < x + 1; seq++, size = 2 * size + 1) {
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    seq--;
    x = x % size;
  }
  return std::pow(y, static_cast<double>(seq));
}

}  // namespace

const char* toString(AnalysisMode m) {
  switch (m) {
    case AnalysisMode::None: return "none";
    case AnalysisMode::Clausal: return "clausal";
    case AnalysisMode::Saturation: return "saturation";
    case AnalysisMode::Division: return "division";
    case AnalysisMode::Mir: return "mir";
  }
  return "?";
}

const char* toString(Status s) {
  switch (s) {
    case Status::Sat: return "SAT";
    case Status::Unsat: return "UNSAT";
    case Status::Unknown: return "UNKNOWN";
  }
  return "?";
}

void SolverConfig::validate() const {
  if (capNumerator <= 0 || capDenominator <= 0 || capNumerator > capDenominator)
    throw std::invalid_argument("config: length fraction must lie in (0,1]");
  if (conflictLimit && *conflictLimit < 0)
    throw std::invalid_argument("config: negative conflict limit");
  if (nodeLimit && *nodeLimit < 0)
    throw std::invalid_argument("config: negative node limit");
  if (timeLimitSeconds && *timeLimitSeconds < 0)
    throw std::invalid_argument("config: negative time limit");
  if (maxLearned < 0) throw std::invalid_argument("config: negative learned bound");
}

void ActivityOrder::bump(int var) {
  if ((act_[var] += inc_) > 1e100) {
    for (double& a : act_) a *= 1e-100;
    inc_ *= 1e-100;
  }
}

int ActivityOrder::pickFree(const Engine& e) const {
  int best = 0;
  double bestAct = -1.0;
  for (int v = 1; v < static_cast<int>(act_.size()); ++v) {
    if (e.isAssignedVar(v)) continue;
    if (act_[v] > bestAct) {
      bestAct = act_[v];
      best = v;
    }
  }
  return best;
}

Solver::Solver(const Problem& problem, const SolverConfig& config, SolveHooks hooks)
    : problem_(problem), config_(config), hooks_(std::move(hooks)),
      engine_(problem.numVars), activity_(0) {
  config_.validate();
  for (const RawTerm& t : problem_.objective) engine_.ensureVars(t.lit.var());
  for (const PBConstraint& c : problem_.constraints)
    engine_.addConstraint(c, Origin::Input);
  int n = engine_.numVars();
  activity_ = ActivityOrder(n);
  phase_.assign(n + 1, 0);
  flipped_.assign(n + 2, 0);
  engine_.setDebugChecks(config_.debugChecks);
  // Accept a learned constraint only when shorter than ceil(num/den * n).
  analysisConfig_.lengthCap = static_cast<size_t>(
      (config_.capNumerator * n + config_.capDenominator - 1) / config_.capDenominator);
  analysisConfig_.strategy.weakening = config_.weakening;
  switch (config_.analysis) {
    case AnalysisMode::Clausal: analysisConfig_.strategy.kind = ReductionKind::Clausal; break;
    case AnalysisMode::Saturation: analysisConfig_.strategy.kind = ReductionKind::Saturation; break;
    case AnalysisMode::Division: analysisConfig_.strategy.kind = ReductionKind::Division; break;
    case AnalysisMode::Mir:
    case AnalysisMode::None: analysisConfig_.strategy.kind = ReductionKind::Mir; break;
  }
}

Lit Solver::decide() const {
  if (config_.heuristic == DecisionHeuristic::FixedOrder) {
    for (int v = 1; v <= engine_.numVars(); ++v)
      if (!engine_.isAssignedVar(v)) return Lit::neg(v);
    throw std::logic_error("decide: no free variable");
  }
  int v = activity_.pickFree(engine_);
  if (v == 0) throw std::logic_error("decide: no free variable");
  return phase_[v] ? Lit::pos(v) : Lit::neg(v);
}

void Solver::backjumpSavingPhases(int level) {
  if (level >= engine_.currentLevel()) return;
  const auto& trail = engine_.trail();
  for (size_t i = engine_.levelStart(level + 1); i < trail.size(); ++i)
    phase_[trail[i].lit.var()] = trail[i].lit.negated() ? 0 : 1;
  engine_.backjumpTo(level);
}

bool Solver::limitsHit() const {
  if (config_.conflictLimit && stats_.conflicts >= *config_.conflictLimit) return true;
  if (config_.nodeLimit && stats_.nodes() >= *config_.nodeLimit) return true;
  if (config_.timeLimitSeconds &&
      wallNow() - startTime_ >= *config_.timeLimitSeconds)
    return true;
  return false;
}

bool Solver::chronoBacktrack() {
  int lvl = engine_.currentLevel();
  while (lvl >= 1 && flipped_[lvl]) --lvl;
  if (lvl == 0) return false;
  Lit dec = engine_.trail()[engine_.levelStart(lvl)].lit;
  backjumpSavingPhases(lvl - 1);
  engine_.assignDecision(~dec);
  flipped_[engine_.currentLevel()] = 1;
  ++stats_.decisions;
  return true;
}

void Solver::reduceDbIfNeeded() {
  if (config_.maxLearned <= 0 || liveLearned_ <= config_.maxLearned) return;
  std::vector<int64_t> ids = engine_.liveLearnedIds();
  std::sort(ids.begin(), ids.end(), [&](int64_t a, int64_t b) {
    if (engine_.lastPropagatedAt(a) != engine_.lastPropagatedAt(b))
      return engine_.lastPropagatedAt(a) < engine_.lastPropagatedAt(b);
    return a < b;
  });
  std::vector<int64_t> victims;
  size_t target = ids.size() / 2;
  for (int64_t id : ids) {
    if (victims.size() >= target) break;
    // pending constraints have not had a chance to propagate yet
    if (!engine_.isLocked(id) && engine_.isAttached(id)) victims.push_back(id);
  }
  engine_.removeConstraints(victims);
  liveLearned_ -= static_cast<int64_t>(victims.size());
}

Status Solver::searchDecision() {
  while (true) {
    std::optional<int64_t> conflict = engine_.propagateToFixpoint();
    if (conflict) {
      ++stats_.conflicts;
      ++conflictsSinceRestart_;
      engine_.setEpoch(stats_.conflicts);
      if (engine_.currentLevel() == 0) return Status::Unsat;
      if (limitsHit()) return Status::Unknown;
      if (config_.analysis == AnalysisMode::None) {
        if (!chronoBacktrack()) return Status::Unsat;
        continue;
      }
      AnalysisResult res = analyze(engine_, *conflict, analysisConfig_);
      weakenedSum_ += res.literalsWeakened;
      weakenCandidateSum_ += res.weakenCandidates;
      if (res.outcome == AnalysisOutcome::Infeasible) return Status::Unsat;
      for (const Term& t : res.learned.terms()) activity_.bump(t.lit.var());
      activity_.decay();
      backjumpSavingPhases(res.backjumpLevel);
      learnedLengthSum_ += static_cast<int64_t>(res.learned.size());
      ++liveLearned_;
      if (hooks_.onLearned) hooks_.onLearned(res.learned);
      engine_.addConstraint(std::move(res.learned), Origin::Learned);
      reduceDbIfNeeded();
    } else {
      if (config_.lubyRestarts && engine_.currentLevel() > 0 &&
          conflictsSinceRestart_ >= static_cast<int64_t>(luby(2.0, restarts_) * 100)) {
        backjumpSavingPhases(0);
        conflictsSinceRestart_ = 0;
        ++restarts_;
        continue;
      }
      if (engine_.assignedCount() == static_cast<size_t>(engine_.numVars()))
        return Status::Sat;
      if (limitsHit()) return Status::Unknown;
      Lit l = decide();
      ++stats_.decisions;
      engine_.assignDecision(l);
      flipped_[engine_.currentLevel()] = 0;
    }
  }
}

std::vector<int8_t> Solver::extractModel() const {
  std::vector<int8_t> model(engine_.numVars() + 1, 0);
  for (int v = 1; v <= engine_.numVars(); ++v) {
    assert(engine_.isAssignedVar(v));
    model[v] = static_cast<int8_t>(engine_.value(Lit::pos(v)) == LitValue::True);
  }
  return model;
}

void Solver::verifyModel(const std::vector<int8_t>& model) const {
  PartialAssignment rho(static_cast<int>(model.size()) - 1);
  for (int v = 1; v < static_cast<int>(model.size()); ++v) rho.set(v, model[v] != 0);
  for (const PBConstraint& c : problem_.constraints)
    if (!satisfiedBy(c, rho))
      throw std::logic_error("model verification failed: " + c.toString());
  for (const RawConstraint& c : problem_.raw)
    if (!satisfiedBy(c, rho))
      throw std::logic_error("model verification failed on an input constraint");
}

Int Solver::evalObjective(const std::vector<int8_t>& model) const {
  Int sum = 0;
  for (const RawTerm& t : problem_.objective) {
    bool bit = model[t.lit.var()] != 0;
    if (t.lit.negated() ? !bit : bit) sum += t.coeff;
  }
  return sum;
}

void Solver::finalizeStats() {
  stats_.propagations = engine_.propagations();
  stats_.learnedCount = 0;
  stats_.learnedPropagatedAtLeastOnce = 0;
  for (int64_t id = 0; id < engine_.dbSize(); ++id) {
    if (engine_.originOf(id) != Origin::Learned) continue;
    ++stats_.learnedCount;
    if (engine_.everPropagated(id)) ++stats_.learnedPropagatedAtLeastOnce;
  }
  stats_.meanLearnedLength =
      stats_.learnedCount > 0
          ? static_cast<double>(learnedLengthSum_) / static_cast<double>(stats_.learnedCount)
          : 0.0;
  stats_.weakenedFraction =
      weakenCandidateSum_ > 0
          ? static_cast<double>(weakenedSum_) / static_cast<double>(weakenCandidateSum_)
          : 0.0;
  stats_.wallTime = wallNow() - startTime_;
}

SolveOutcome Solver::run() {
  startTime_ = wallNow();
  SolveOutcome out;
  if (!problem_.hasObjective) {
    Status st = searchDecision();
    out.status = st;
    if (st == Status::Sat) {
      out.model = extractModel();
      verifyModel(*out.model);
    }
  } else {
    std::optional<std::vector<int8_t>> best;
    std::optional<Int> bestValue;
    while (true) {
      Status st = searchDecision();
      if (st == Status::Sat) {
        std::vector<int8_t> model = extractModel();
        verifyModel(model);
        Int value = evalObjective(model);
        assert(!bestValue || value < *bestValue);
        best = std::move(model);
        bestValue = value;
        if (hooks_.onImprovedObjective) hooks_.onImprovedObjective(value);
        // Solution-improving constraint: objective <= best - 1.
        RawConstraint bound;
        bound.terms = problem_.objective;
        bound.rel = Relation::Le;
        bound.rhs = value - 1;
        backjumpSavingPhases(0);
        std::vector<PBConstraint> cs = normalize(bound);
        // The bound excludes the model just found, so it cannot normalize
        // to a tautology.
        assert(!cs.empty());
        for (PBConstraint& c : cs) engine_.addConstraint(std::move(c), Origin::Bound);
        continue;
      }
      if (st == Status::Unsat) {
        if (best) {
          out.status = Status::Sat;
          out.optimumProven = true;
        } else {
          out.status = Status::Unsat;
        }
      } else {
        out.status = best ? Status::Sat : Status::Unknown;
      }
      break;
    }
    out.model = std::move(best);
    out.objectiveValue = std::move(bestValue);
  }
  finalizeStats();
  out.stats = stats_;
  return out;
}

SolveOutcome solve(const Problem& problem, const SolverConfig& config,
                   const SolveHooks& hooks) {
  return Solver(problem, config, hooks).run();
}

}  // namespace cuttle
