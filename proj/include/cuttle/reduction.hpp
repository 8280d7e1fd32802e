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

#ifndef CUTTLE_REDUCTION_HPP
#define CUTTLE_REDUCTION_HPP

#include <optional>

#include "cuttle/constraint.hpp"

namespace cuttle {

enum class ReductionKind : uint8_t { Clausal, Saturation, Division, Mir };
enum class Weakening : uint8_t { Iterative, AllAtOnce };

struct ReductionStrategy {
  ReductionKind kind = ReductionKind::Mir;
  // Ignored by clausal reduction: the extracted clause already propagates
  // tightly over the reals.
  Weakening weakening = Weakening::AllAtOnce;
};

// Per-call weakening counters, accumulated across a conflict.
struct ReduceStats {
  int64_t weakened = 0;
  int64_t candidates = 0;
};

// The clause (lr + falsified literals of r) >= 1 over r's literals.
// Pre: r propagated lr under rho.
PBConstraint reduceClausal(const PBConstraint& r, Lit lr, const PartialAssignment& rho);

// The ordered weakening candidates of r: non-falsified literals other than
// lr, free ones first, then satisfied ones, ascending variable index within
// each class. With a divisor, restricted to coefficients it does not divide
// (the set W of division/MIR reduction).
std::vector<Lit> weakeningCandidates(const PBConstraint& r, Lit lr,
                                     const PartialAssignment& rho,
                                     const Int* divisor = nullptr);

// Weaken non-falsified literals (free first, then satisfied, ascending
// variable index) and saturate until the resolvent with the conflict side c
// is falsified under rho. AllAtOnce weakens the whole candidate set and
// saturates once. Pre: r propagated lr, c falsified under rho; both policies
// guarantee slack(resolve(c, result, lr), rho) < 0.
PBConstraint reduceSaturation(const PBConstraint& r, const PBConstraint& c, Lit lr,
                              const PartialAssignment& rho, Weakening policy,
                              ReduceStats* stats = nullptr);

// Same contract, weakening only non-falsified literals whose coefficient the
// resolution coefficient a_r does not divide, then ceil-dividing by a_r.
PBConstraint reduceDivision(const PBConstraint& r, const PBConstraint& c, Lit lr,
                            const PartialAssignment& rho, Weakening policy,
                            ReduceStats* stats = nullptr);

// Same contract with the MIR cut in place of division.
PBConstraint reduceMIR(const PBConstraint& r, const PBConstraint& c, Lit lr,
                       const PartialAssignment& rho, Weakening policy,
                       ReduceStats* stats = nullptr);

PBConstraint reduce(const ReductionStrategy& strategy, const PBConstraint& r,
                    const PBConstraint& c, Lit lr, const PartialAssignment& rho,
                    ReduceStats* stats = nullptr);

// Length-cap fallback used on too-long learned constraints: repeatedly
// weakens the smallest-coefficient non-falsified literal and saturates until
// fewer than cap terms remain. Returns nullopt when this degenerates before
// reaching the cap (no weakening candidate left, or the constraint collapses
// to a tautology).
std::optional<PBConstraint> weakenToCap(const PBConstraint& c,
                                        const PartialAssignment& rho, size_t cap);

}  // namespace cuttle

#endif  // CUTTLE_REDUCTION_HPP
