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

#ifndef CUTTLE_SOLVER_HPP
#define CUTTLE_SOLVER_HPP

#include <functional>
#include <optional>
#include <vector>

#include "cuttle/analysis.hpp"
#include "cuttle/engine.hpp"

namespace cuttle {

enum class AnalysisMode : uint8_t { None, Clausal, Saturation, Division, Mir };
enum class DecisionHeuristic : uint8_t { Activity, FixedOrder };
enum class Status : uint8_t { Sat, Unsat, Unknown };

const char* toString(AnalysisMode m);
const char* toString(Status s);

struct SolverConfig {
  AnalysisMode analysis = AnalysisMode::Mir;
  Weakening weakening = Weakening::AllAtOnce;
  // Learned-length cap as an exact fraction of the problem's variable count:
  // a conflict constraint is accepted only with < ceil(num/den * n) terms.
  long long capNumerator = 3;
  long long capDenominator = 20;
  std::optional<int64_t> conflictLimit;
  std::optional<int64_t> nodeLimit;  // nodes = decisions + conflicts
  std::optional<double> timeLimitSeconds;
  uint64_t seed = 0;  // recorded in run keys; the search itself is deterministic
  DecisionHeuristic heuristic = DecisionHeuristic::Activity;
  bool lubyRestarts = false;
  // > 0: delete least-recently-propagated learned constraints when the live
  // learned count exceeds this bound.
  int64_t maxLearned = 0;
  bool debugChecks = false;

  void validate() const;  // throws std::invalid_argument
};

struct Statistics {
  int64_t decisions = 0;
  int64_t conflicts = 0;
  int64_t propagations = 0;
  int64_t learnedCount = 0;
  int64_t learnedPropagatedAtLeastOnce = 0;
  double meanLearnedLength = 0.0;
  double weakenedFraction = 0.0;
  double wallTime = 0.0;

  int64_t nodes() const { return decisions + conflicts; }
  double propagatingFraction() const {
    return learnedCount > 0
               ? static_cast<double>(learnedPropagatedAtLeastOnce) / learnedCount
               : 0.0;
  }
};

struct SolveOutcome {
  Status status = Status::Unknown;
  std::optional<std::vector<int8_t>> model;  // value per var, entry 0 unused
  bool optimumProven = false;
  std::optional<Int> objectiveValue;
  Statistics stats;
};

struct Problem {
  int numVars = 0;
  std::vector<PBConstraint> constraints;
  // Pre-normalization originals; when present, SAT models are verified
  // against these as well.
  std::vector<RawConstraint> raw;
  bool hasObjective = false;
  std::vector<RawTerm> objective;  // minimized
};

struct SolveHooks {
  std::function<void(const PBConstraint&)> onLearned;
  std::function<void(const Int&)> onImprovedObjective;
};

// Variable activity order: additive bump, multiplicative decay 0.95, ties
// broken by lowest index.
class ActivityOrder {
 public:
  explicit ActivityOrder(int numVars) : act_(numVars + 1, 0.0) {}
  void bump(int var);
  void decay() { inc_ /= 0.95; }
  double activity(int var) const { return act_[var] / inc_; }
  // Highest-activity free variable, ties by lowest index; 0 when none free.
  int pickFree(const Engine& e) const;

 private:
  std::vector<double> act_;
  double inc_ = 1.0;
};

class Solver {
 public:
  Solver(const Problem& problem, const SolverConfig& config, SolveHooks hooks = {});

  SolveOutcome run();

  // Next decision literal under the configured heuristic. Pre: propagation
  // fixpoint, no conflict, at least one free variable.
  Lit decide() const;

  Engine& engine() { return engine_; }
  const Engine& engine() const { return engine_; }

 private:
  Status searchDecision();
  bool chronoBacktrack();  // DPLL flip for AnalysisMode::None
  void backjumpSavingPhases(int level);
  bool limitsHit() const;
  void reduceDbIfNeeded();
  void finalizeStats();
  std::vector<int8_t> extractModel() const;
  void verifyModel(const std::vector<int8_t>& model) const;
  Int evalObjective(const std::vector<int8_t>& model) const;

  const Problem& problem_;
  SolverConfig config_;
  SolveHooks hooks_;
  Engine engine_;
  ActivityOrder activity_;
  std::vector<int8_t> phase_;
  std::vector<uint8_t> flipped_;  // per level, AnalysisMode::None only
  AnalysisConfig analysisConfig_;
  Statistics stats_;
  int64_t learnedLengthSum_ = 0;
  int64_t weakenedSum_ = 0;
  int64_t weakenCandidateSum_ = 0;
  int64_t liveLearned_ = 0;
  int64_t restarts_ = 0;
  int64_t conflictsSinceRestart_ = 0;
  double startTime_ = 0.0;
};

SolveOutcome solve(const Problem& problem, const SolverConfig& config,
                   const SolveHooks& hooks = {});

}  // namespace cuttle

#endif  // CUTTLE_SOLVER_HPP
