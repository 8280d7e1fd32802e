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

#include <cassert>
#include <stdexcept>

namespace cuttle {

namespace {
// Constraints whose total coefficient mass stays below this bound use plain
// int64 slack counters; anything larger takes the exact big path.
constexpr long long kSmallLimit = 1LL << 60;
}  // namespace

Engine::Engine(int numVars) { ensureVars(numVars); }

void Engine::ensureVars(int numVars) {
  if (numVars <= numVars_) return;
  numVars_ = numVars;
  value_.resize(numVars_ + 1, -1);
  level_.resize(numVars_ + 1, -1);
  reason_.resize(numVars_ + 1, kDecisionReason);
  pos_.resize(numVars_ + 1, -1);
  occ_.resize(2 * numVars_ + 2);
}

LitValue Engine::value(Lit l) const {
  int8_t v = value_[l.var()];
  if (v < 0) return LitValue::Free;
  bool truth = l.negated() ? v == 0 : v == 1;
  return truth ? LitValue::True : LitValue::False;
}

PartialAssignment Engine::snapshot() const {
  PartialAssignment rho(numVars_);
  for (const TrailEntry& e : trail_) rho.assign(e.lit);
  return rho;
}

int64_t Engine::addConstraint(PBConstraint c, Origin origin) {
  if (c.isTautology()) throw std::invalid_argument("addConstraint: tautology");
  ensureVars(c.maxVar());
  int64_t id = static_cast<int64_t>(store_.size());
  c.setId(id);
  c.setOrigin(origin);
  Stored s;
  s.c = std::move(c);
  s.origin = origin;
  store_.push_back(std::move(s));
  return id;
}

void Engine::attach(int64_t id) {
  Stored& s = store_[id];
  assert(!s.attached && !s.deleted);
  Int sum = 0;
  Int maxCoeff = 0;
  for (const Term& t : s.c.terms()) {
    sum += t.coeff;
    if (t.coeff > maxCoeff) maxCoeff = t.coeff;
  }
  Int bound = sum + s.c.degree();
  s.big = !bound.fits64() || bound.as64() >= kSmallLimit;
  Int sl = -s.c.degree();
  for (const Term& t : s.c.terms())
    if (value(t.lit) != LitValue::False) sl += t.coeff;
  if (s.big) {
    s.slackB = sl;
    s.maxCoeffB = maxCoeff;
  } else {
    s.slackS = sl.as64();
    s.maxCoeffS = maxCoeff.as64();
  }
  for (const Term& t : s.c.terms())
    occ_[t.lit.index()].push_back(
        {static_cast<uint32_t>(id), s.big ? -1 : t.coeff.as64()});
  s.attached = true;
}

void Engine::onAssigned(Lit l) {
  // Constraints containing ~l lose that coefficient from their slack.
  for (const Occ& o : occ_[(~l).index()]) {
    Stored& s = store_[o.cidx];
    if (o.coeff >= 0)
      s.slackS -= o.coeff;
    else
      s.slackB -= *s.c.coeffOf(~l);
  }
}

void Engine::onUnassigned(Lit l) {
  for (const Occ& o : occ_[(~l).index()]) {
    Stored& s = store_[o.cidx];
    if (o.coeff >= 0)
      s.slackS += o.coeff;
    else
      s.slackB += *s.c.coeffOf(~l);
  }
}

void Engine::assignDecision(Lit l) {
  trailLim_.push_back(static_cast<int>(trail_.size()));
  assign(l, kDecisionReason);
}

void Engine::assign(Lit l, int64_t reason) {
  int v = l.var();
  assert(v >= 1 && v <= numVars_);
  if (value_[v] >= 0) throw std::logic_error("assign: variable already assigned");
  value_[v] = l.negated() ? 0 : 1;
  level_[v] = currentLevel();
  reason_[v] = reason;
  pos_[v] = static_cast<int>(trail_.size());
  trail_.push_back({l, level_[v], reason, pos_[v]});
  if (reason != kDecisionReason) ++store_[reason].locks;
  onAssigned(l);
}

bool Engine::examine(int64_t id) {
  Stored& s = store_[id];
  if (s.big) {
    Int sl = s.slackB;  // fixed during the scan: propagations cannot touch it
    if (sl.sign() < 0) return true;
    if (sl < s.maxCoeffB) {
      for (const Term& t : s.c.terms()) {
        if (value(t.lit) == LitValue::Free && t.coeff > sl) {
          assign(t.lit, id);
          ++propagations_;
          s.everPropagated = true;
          s.lastPropagatedAt = epoch_;
        }
      }
    }
    return false;
  }
  long long sl = s.slackS;
  if (sl < 0) return true;
  if (sl < s.maxCoeffS) {
    for (const Term& t : s.c.terms()) {
      if (value(t.lit) == LitValue::Free && t.coeff.as64() > sl) {
        assign(t.lit, id);
        ++propagations_;
        s.everPropagated = true;
        s.lastPropagatedAt = epoch_;
      }
    }
  }
  return false;
}

std::optional<int64_t> Engine::propagateToFixpoint() {
  // New constraints first: register counters, then examine in id order.
  int64_t firstNew = attachedUpTo_;
  while (attachedUpTo_ < dbSize()) attach(attachedUpTo_++);
  for (int64_t id = firstNew; id < dbSize(); ++id)
    if (examine(id)) return id;

  while (qhead_ < trail_.size()) {
    Lit l = trail_[qhead_++].lit;
    // Only constraints containing ~l lost slack; examine them in id order.
    for (const Occ& o : occ_[(~l).index()])
      if (examine(o.cidx)) return static_cast<int64_t>(o.cidx);
  }
#ifndef NDEBUG
  if (debugChecks_) checkSlackCache();
#endif
  return std::nullopt;
}

void Engine::backjumpTo(int level) {
  assert(level >= 0 && level <= currentLevel());
  if (level == currentLevel()) return;
  int keep = trailLim_[level];
  for (int i = static_cast<int>(trail_.size()) - 1; i >= keep; --i) {
    const TrailEntry& e = trail_[i];
    int v = e.lit.var();
    onUnassigned(e.lit);
    if (e.reason != kDecisionReason) --store_[e.reason].locks;
    value_[v] = -1;
    level_[v] = -1;
    reason_[v] = kDecisionReason;
    pos_[v] = -1;
  }
  trail_.resize(keep);
  trailLim_.resize(level);
  if (qhead_ > trail_.size()) qhead_ = trail_.size();
}

Int Engine::cachedSlack(int64_t id) const {
  const Stored& s = store_[id];
  assert(s.attached && !s.deleted);
  return s.big ? s.slackB : Int(s.slackS);
}

std::vector<int64_t> Engine::liveLearnedIds() const {
  std::vector<int64_t> out;
  for (int64_t id = 0; id < dbSize(); ++id)
    if (!store_[id].deleted && store_[id].origin == Origin::Learned)
      out.push_back(id);
  return out;
}

void Engine::removeConstraints(const std::vector<int64_t>& ids) {
  for (int64_t id : ids) {
    Stored& s = store_[id];
    assert(s.origin == Origin::Learned && s.attached && !s.deleted && s.locks == 0);
    s.deleted = true;
    s.c = PBConstraint();  // release term memory
  }
  // Occurrence lists must only reference live constraints.
  if (!ids.empty()) rebuildOccurrences();
}

void Engine::rebuildOccurrences() {
  for (auto& list : occ_) list.clear();
  for (int64_t id = 0; id < dbSize(); ++id) {
    const Stored& s = store_[id];
    if (s.deleted || !s.attached) continue;
    for (const Term& t : s.c.terms())
      occ_[t.lit.index()].push_back(
          {static_cast<uint32_t>(id), s.big ? -1 : t.coeff.as64()});
  }
}

void Engine::checkSlackCache() const {
  PartialAssignment rho = snapshot();
  for (int64_t id = 0; id < dbSize(); ++id) {
    const Stored& s = store_[id];
    if (s.deleted || !s.attached) continue;
    Int expect = slack(s.c, rho);
    Int got = s.big ? s.slackB : Int(s.slackS);
    if (expect != got)
      throw std::logic_error("slack cache mismatch on constraint " +
                             std::to_string(id) + ": cached " + got.toString() +
                             ", actual " + expect.toString());
  }
}

}  // namespace cuttle
