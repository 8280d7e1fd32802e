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

#ifndef CUTTLE_ENGINE_HPP
#define CUTTLE_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cuttle/constraint.hpp"

namespace cuttle {

constexpr int64_t kDecisionReason = -1;

struct TrailEntry {
  Lit lit;         // the literal set true
  int level = 0;
  int64_t reason = kDecisionReason;  // propagating constraint id, or decision
  int position = 0;                  // chronological index on the trail
};

// Assignment trail with decision levels plus a constraint database with
// counter-based (cached slack) unit propagation. Every assignment updates
// the cached slack of all constraints containing the falsified literal, so
// the cache always equals slack(C, current assignment).
//
// Propagation is deterministic: the queue processes assignments in trail
// order, occurrences of each literal are examined in ascending constraint
// id, and literals inside a constraint propagate in ascending variable
// index.
class Engine {
 public:
  explicit Engine(int numVars = 0);

  void ensureVars(int numVars);
  int numVars() const { return numVars_; }

  // --- constraint database ---

  // Takes ownership, assigns the next id, and queues the constraint for
  // attachment on the next propagateToFixpoint(). Tautologies are rejected.
  int64_t addConstraint(PBConstraint c, Origin origin);

  int64_t dbSize() const { return static_cast<int64_t>(store_.size()); }
  bool isLive(int64_t id) const { return !store_[id].deleted; }
  bool isAttached(int64_t id) const { return store_[id].attached; }
  const PBConstraint& constraint(int64_t id) const { return store_[id].c; }
  Origin originOf(int64_t id) const { return store_[id].origin; }

  // Cached slack of a live, attached constraint under the current trail.
  Int cachedSlack(int64_t id) const;

  // --- trail ---

  int currentLevel() const { return static_cast<int>(trailLim_.size()); }
  const std::vector<TrailEntry>& trail() const { return trail_; }
  // Index on the trail where a level >= 1 starts.
  int levelStart(int level) const {
    assert(level >= 1 && level <= currentLevel());
    return trailLim_[level - 1];
  }

  LitValue value(Lit l) const;
  bool isAssignedVar(int var) const { return value_[var] >= 0; }
  int levelOf(int var) const { return level_[var]; }
  int64_t reasonOf(int var) const { return reason_[var]; }
  int positionOf(int var) const { return pos_[var]; }
  size_t assignedCount() const { return trail_.size(); }
  PartialAssignment snapshot() const;

  // Opens a new decision level and assigns l true.
  void assignDecision(Lit l);
  // Assigns l true at the current level with the given reason constraint
  // (kDecisionReason only for flipped assignments at an existing level).
  void assign(Lit l, int64_t reason);

  // Attaches pending constraints and propagates until fixpoint or until a
  // constraint becomes falsified, returning its id. A returned conflict must
  // be resolved (backjump below the falsifying assignment) before propagating
  // further; each constraint is examined once per slack change.
  std::optional<int64_t> propagateToFixpoint();

  // Undoes all assignments above the target level in reverse chronological
  // order; cached slacks are restored incrementally.
  void backjumpTo(int level);

  // --- statistics and learned-constraint management ---

  int64_t propagations() const { return propagations_; }
  void setEpoch(int64_t epoch) { epoch_ = epoch; }
  bool everPropagated(int64_t id) const { return store_[id].everPropagated; }
  int64_t lastPropagatedAt(int64_t id) const { return store_[id].lastPropagatedAt; }
  // A constraint is locked while it is the reason of a trail literal.
  bool isLocked(int64_t id) const { return store_[id].locks > 0; }
  std::vector<int64_t> liveLearnedIds() const;
  // Pre: every id is learned, live and not locked. Removes the batch and
  // rebuilds the occurrence lists.
  void removeConstraints(const std::vector<int64_t>& ids);

  // --- debugging ---

  void setDebugChecks(bool on) { debugChecks_ = on; }
  // Recomputes every live slack from scratch and compares with the cache.
  void checkSlackCache() const;

 private:
  struct Stored {
    PBConstraint c;
    Origin origin = Origin::Input;
    bool deleted = false;
    bool attached = false;
    bool big = false;             // coefficients do not fit the fast path
    long long slackS = 0;         // cached slack, fast path
    Int slackB;                   // cached slack, big path
    long long maxCoeffS = 0;
    Int maxCoeffB;
    bool everPropagated = false;
    int64_t lastPropagatedAt = -1;
    int locks = 0;
  };
  struct Occ {
    uint32_t cidx;
    long long coeff;  // < 0 marks a big-path constraint (look up exact coeff)
  };

  void attach(int64_t id);
  void onAssigned(Lit l);    // counter updates for the falsified literal
  void onUnassigned(Lit l);  // inverse
  // Examines one constraint: returns true on conflict, else enqueues its
  // propagations.
  bool examine(int64_t id);
  void rebuildOccurrences();

  int numVars_ = 0;
  std::vector<Stored> store_;
  int64_t attachedUpTo_ = 0;
  std::vector<std::vector<Occ>> occ_;  // per literal index
  std::vector<int8_t> value_;          // per var: -1 free, 0, 1
  std::vector<int> level_;
  std::vector<int64_t> reason_;
  std::vector<int> pos_;
  std::vector<TrailEntry> trail_;
  std::vector<int> trailLim_;
  size_t qhead_ = 0;
  int64_t propagations_ = 0;
  int64_t epoch_ = 0;
  bool debugChecks_ = false;
};

}  // namespace cuttle

#endif  // CUTTLE_ENGINE_HPP
