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

#ifndef CUTTLE_ANALYSIS_HPP
#define CUTTLE_ANALYSIS_HPP

#include "cuttle/engine.hpp"
#include "cuttle/reduction.hpp"

namespace cuttle {

enum class AnalysisOutcome : uint8_t { Asserting, Infeasible };

struct AnalysisResult {
  PBConstraint learned;
  int backjumpLevel = 0;
  AnalysisOutcome outcome = AnalysisOutcome::Asserting;
  int64_t resolutionSteps = 0;
  int64_t literalsWeakened = 0;
  int64_t weakenCandidates = 0;
  bool usedClausalFallback = false;
};

struct AnalysisConfig {
  ReductionStrategy strategy;
  // Accept a learned constraint only when it has fewer than lengthCap terms;
  // 0 disables the cap. Too-long constraints get the weakening fallback and,
  // failing that, a clausal re-analysis whose result is always accepted.
  size_t lengthCap = 0;
};

// FUIP conflict analysis: walks the trail backwards from the falsified
// constraint, reducing and resolving away each propagated literal whose
// negation occurs in the running constraint, until the result is asserting
// or falsified under the empty assignment. Does not mutate the engine.
// Throws std::logic_error when the conflict constraint is not falsified.
AnalysisResult analyze(const Engine& engine, int64_t conflictId,
                       const AnalysisConfig& config);

// True iff c would propagate at least one literal (and is not falsified)
// under the trail prefix with every current-level assignment removed.
bool isAsserting(const PBConstraint& c, const Engine& engine);

// Smallest level k such that removing all assignments deeper than k leaves c
// non-falsified and propagating. Pre: isAsserting(c, engine).
int computeBackjumpLevel(const PBConstraint& c, const Engine& engine);

}  // namespace cuttle

#endif  // CUTTLE_ANALYSIS_HPP
