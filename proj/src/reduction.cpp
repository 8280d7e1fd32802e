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

#include "cuttle/reduction.hpp"

#include <algorithm>
#include <cassert>

namespace cuttle {

namespace {

bool resolventFalsified(const PBConstraint& c, const PBConstraint& reduced, Lit lr,
                        const PartialAssignment& rho) {
  return slack(resolve(c, reduced, lr), rho).sign() < 0;
}

}  // namespace

PBConstraint reduceClausal(const PBConstraint& r, Lit lr, const PartialAssignment& rho) {
  assert(r.coeffOf(lr) != nullptr);
  std::vector<Term> terms;
  for (const Term& t : r.terms())
    if (t.lit == lr || rho.isFalse(t.lit)) terms.push_back({t.lit, 1});
  return PBConstraint::fromCanonical(std::move(terms), 1);
}

std::vector<Lit> weakeningCandidates(const PBConstraint& r, Lit lr,
                                     const PartialAssignment& rho,
                                     const Int* divisor) {
  std::vector<Lit> free, satisfied;
  for (const Term& t : r.terms()) {
    if (t.lit == lr || rho.isFalse(t.lit)) continue;
    if (divisor && divides(*divisor, t.coeff)) continue;
    (rho.isFree(t.lit) ? free : satisfied).push_back(t.lit);
  }
  free.insert(free.end(), satisfied.begin(), satisfied.end());
  return free;
}

PBConstraint reduceSaturation(const PBConstraint& r, const PBConstraint& c, Lit lr,
                              const PartialAssignment& rho, Weakening policy,
                              ReduceStats* stats) {
  std::vector<Lit> order = weakeningCandidates(r, lr, rho);
  if (stats) stats->candidates += static_cast<int64_t>(order.size());
  PBConstraint reduced = r;
  if (policy == Weakening::AllAtOnce) {
    for (Lit l : order) reduced = weaken(reduced, l);
    if (stats) stats->weakened += static_cast<int64_t>(order.size());
    return saturate(reduced);
  }
  bool saturated = false;
  size_t next = 0;
  while (!resolventFalsified(c, reduced, lr, rho)) {
    if (!saturated) {
      // Saturation alone may already make the resolvent falsified (e.g. a
      // reason whose trigger coefficient exceeds the degree).
      reduced = saturate(reduced);
      saturated = true;
      continue;
    }
    // The slack hits 0 at the latest once every candidate is weakened.
    assert(next < order.size());
    reduced = saturate(weaken(reduced, order[next++]));
    if (stats) ++stats->weakened;
  }
  return reduced;
}

namespace {

PBConstraint reduceByCut(const PBConstraint& r, const PBConstraint& c, Lit lr,
                         const PartialAssignment& rho, Weakening policy,
                         ReduceStats* stats, PBConstraint (*cut)(const PBConstraint&, const Int&)) {
  const Int* arPtr = r.coeffOf(lr);
  assert(arPtr != nullptr);
  Int ar = *arPtr;
  std::vector<Lit> order = weakeningCandidates(r, lr, rho, &ar);
  if (stats) stats->candidates += static_cast<int64_t>(order.size());
  PBConstraint weakened = r;
  if (policy == Weakening::AllAtOnce) {
    for (Lit l : order) weakened = weaken(weakened, l);
    if (stats) stats->weakened += static_cast<int64_t>(order.size());
    return cut(weakened, ar);
  }
  size_t next = 0;
  while (true) {
    PBConstraint reduced = cut(weakened, ar);
    if (resolventFalsified(c, reduced, lr, rho)) return reduced;
    // Guaranteed to hold at the latest once all of W is weakened.
    assert(next < order.size());
    weakened = weaken(weakened, order[next++]);
    if (stats) ++stats->weakened;
  }
}

}  // namespace

PBConstraint reduceDivision(const PBConstraint& r, const PBConstraint& c, Lit lr,
                            const PartialAssignment& rho, Weakening policy,
                            ReduceStats* stats) {
  return reduceByCut(r, c, lr, rho, policy, stats, &divide);
}

PBConstraint reduceMIR(const PBConstraint& r, const PBConstraint& c, Lit lr,
                       const PartialAssignment& rho, Weakening policy,
                       ReduceStats* stats) {
  return reduceByCut(r, c, lr, rho, policy, stats, &mir);
}

PBConstraint reduce(const ReductionStrategy& strategy, const PBConstraint& r,
                    const PBConstraint& c, Lit lr, const PartialAssignment& rho,
                    ReduceStats* stats) {
  switch (strategy.kind) {
    case ReductionKind::Clausal:
      return reduceClausal(r, lr, rho);
    case ReductionKind::Saturation:
      return reduceSaturation(r, c, lr, rho, strategy.weakening, stats);
    case ReductionKind::Division:
      return reduceDivision(r, c, lr, rho, strategy.weakening, stats);
    case ReductionKind::Mir:
      return reduceMIR(r, c, lr, rho, strategy.weakening, stats);
  }
  assert(false);
  return r;
}

std::optional<PBConstraint> weakenToCap(const PBConstraint& c,
                                        const PartialAssignment& rho, size_t cap) {
  PBConstraint out = c;
  while (out.size() >= cap) {
    const Term* pick = nullptr;
    for (const Term& t : out.terms()) {
      if (rho.isFalse(t.lit)) continue;
      if (!pick || t.coeff < pick->coeff) pick = &t;
    }
    if (!pick) return std::nullopt;
    out = saturate(weaken(out, pick->lit));
    if (out.isTautology()) return std::nullopt;
  }
  return out;
}

}  // namespace cuttle
