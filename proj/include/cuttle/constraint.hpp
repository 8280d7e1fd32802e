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

#ifndef CUTTLE_CONSTRAINT_HPP
#define CUTTLE_CONSTRAINT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cuttle/bigint.hpp"
#include "cuttle/literal.hpp"

namespace cuttle {

enum class Origin : uint8_t { Input, Learned, Bound };

struct Term {
  Lit lit;
  Int coeff;
};

// A normalized pseudo-Boolean constraint sum(a_i * l_i) >= b with integer
// coefficients a_i >= 1, degree b >= 0, and at most one term per variable.
// Terms are kept sorted by variable index. A degree of 0 marks a tautology;
// such values are never stored in a constraint database.
class PBConstraint {
 public:
  PBConstraint() = default;

  // Builds the normalized form of sum(c_i * l_i) >= rhs. Signed coefficients
  // and repeated variables are allowed; negations are pushed into literals
  // and opposite-literal pairs on one variable are merged. The degree is
  // clamped at 0.
  static PBConstraint fromTerms(std::vector<std::pair<Lit, Int>> raw, Int rhs);

  // Fast path for callers that guarantee canonical input: terms sorted by
  // var, unique vars, all coefficients >= 1, degree >= 0.
  static PBConstraint fromCanonical(std::vector<Term> terms, Int degree);

  std::span<const Term> terms() const { return terms_; }
  const Int& degree() const { return degree_; }
  size_t size() const { return terms_.size(); }
  bool isTautology() const { return degree_.isZero(); }

  // Exact-literal lookup; nullptr when l (with this polarity) is absent.
  const Int* coeffOf(Lit l) const;
  // Term on this variable regardless of polarity; nullptr when absent.
  const Term* termOnVar(int var) const;
  int maxVar() const { return terms_.empty() ? 0 : terms_.back().lit.var(); }

  int64_t id() const { return id_; }
  Origin origin() const { return origin_; }
  void setId(int64_t id) { id_ = id; }
  void setOrigin(Origin o) { origin_ = o; }

  // Semantic equality on terms and degree; id/origin are metadata.
  friend bool operator==(const PBConstraint& a, const PBConstraint& b);
  friend bool operator!=(const PBConstraint& a, const PBConstraint& b) {
    return !(a == b);
  }

  std::string toString() const;

 private:
  std::vector<Term> terms_;
  Int degree_;
  int64_t id_ = -1;
  Origin origin_ = Origin::Input;
};

// Slack of C under rho: sum of coefficients of non-falsified literals minus
// the degree. C is falsified under rho iff the result is negative.
Int slack(const PBConstraint& c, const PartialAssignment& rho);

// Literals C forces true: the free literals with coefficient > slack.
// Pre: C is not falsified under rho.
std::vector<Lit> propagatedLiterals(const PBConstraint& c, const PartialAssignment& rho);

// Removes l from C, lowering the degree by l's coefficient (clamped at 0).
// Throws std::invalid_argument when l does not occur in C.
PBConstraint weaken(const PBConstraint& c, Lit l);

// Clamps every coefficient to the degree. Preserves the 0-1 solution set.
PBConstraint saturate(const PBConstraint& c);

// Ceil-divides coefficients and degree by d >= 1 (Chvatal-Gomory rounding).
PBConstraint divide(const PBConstraint& c, const Int& d);

// Mixed-integer-rounding cut with divisor d >= 1, in integer-normalized form
// (the rational cut multiplied through by b mod d). When d divides the degree
// this coincides with divide(c, d).
PBConstraint mir(const PBConstraint& c, const Int& d);

// Generalized resolution: the smallest integer linear combination of c and r
// cancelling the variable of l. Pre: l occurs in r, ~l occurs in c; throws
// std::invalid_argument otherwise. Opposite-literal pairs on other variables
// are merged and the result is re-normalized.
PBConstraint resolve(const PBConstraint& c, const PBConstraint& r, Lit l);

// True iff the total assignment satisfies C (free variables count as false,
// so use total assignments over C's variables).
bool satisfiedBy(const PBConstraint& c, const PartialAssignment& total);

enum class Relation { Ge, Le, Eq };

struct RawTerm {
  Int coeff;  // signed
  Lit lit;
};

// A linear inequality as read from input, before normalization.
struct RawConstraint {
  std::vector<RawTerm> terms;
  Relation rel = Relation::Ge;
  Int rhs;
};

// Normalizes a raw inequality into 0, 1 or 2 PB constraints with the same
// 0-1 solution set; "=" yields two, tautologies yield none.
std::vector<PBConstraint> normalize(const RawConstraint& raw);

bool satisfiedBy(const RawConstraint& c, const PartialAssignment& total);

}  // namespace cuttle

#endif  // CUTTLE_CONSTRAINT_HPP
