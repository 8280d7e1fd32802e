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

#include "cuttle/constraint.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cuttle {

PBConstraint PBConstraint::fromTerms(std::vector<std::pair<Lit, Int>> raw, Int rhs) {
  // Accumulate a signed coefficient per variable, with negations rewritten
  // via ~x = 1 - x. A coefficient c on ~x becomes -c on x and lowers the
  // right-hand side by c.
  std::map<int, Int> acc;
  for (auto& [lit, c] : raw) {
    assert(lit.valid());
    if (lit.negated()) {
      acc[lit.var()] -= c;
      rhs -= c;
    } else {
      acc[lit.var()] += c;
    }
  }
  PBConstraint out;
  for (auto& [var, c] : acc) {
    if (c.isZero()) continue;
    if (c.sign() > 0) {
      out.terms_.push_back({Lit::pos(var), c});
    } else {
      // c*x with c < 0 equals |c|*~x - |c|.
      out.terms_.push_back({Lit::neg(var), -c});
      rhs += -c;
    }
  }
  if (rhs.sign() <= 0) {
    out.degree_ = 0;
    return out;
  }
  out.degree_ = std::move(rhs);
  return out;
}

PBConstraint PBConstraint::fromCanonical(std::vector<Term> terms, Int degree) {
  PBConstraint out;
  out.terms_ = std::move(terms);
  out.degree_ = std::move(degree);
#ifndef NDEBUG
  assert(out.degree_.sign() >= 0);
  for (size_t i = 0; i < out.terms_.size(); ++i) {
    assert(out.terms_[i].coeff.sign() > 0);
    assert(i == 0 || out.terms_[i - 1].lit.var() < out.terms_[i].lit.var());
  }
#endif
  return out;
}

const Int* PBConstraint::coeffOf(Lit l) const {
  const Term* t = termOnVar(l.var());
  return t && t->lit == l ? &t->coeff : nullptr;
}

const Term* PBConstraint::termOnVar(int var) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), var,
                             [](const Term& t, int v) { return t.lit.var() < v; });
  return it != terms_.end() && it->lit.var() == var ? &*it : nullptr;
}

bool operator==(const PBConstraint& a, const PBConstraint& b) {
  if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].lit != b.terms_[i].lit || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  }
  return true;
}

std::string PBConstraint::toString() const {
  std::ostringstream os;
  for (const Term& t : terms_) os << "+" << t.coeff << " " << t.lit.toString() << " ";
  os << ">= " << degree_;
  return os.str();
}

Int slack(const PBConstraint& c, const PartialAssignment& rho) {
  Int s = -c.degree();
  for (const Term& t : c.terms())
    if (!rho.isFalse(t.lit)) s += t.coeff;
  return s;
}

std::vector<Lit> propagatedLiterals(const PBConstraint& c, const PartialAssignment& rho) {
  Int s = slack(c, rho);
  assert(s.sign() >= 0 && "propagatedLiterals on a falsified constraint");
  std::vector<Lit> out;
  for (const Term& t : c.terms())
    if (rho.isFree(t.lit) && t.coeff > s) out.push_back(t.lit);
  return out;
}

PBConstraint weaken(const PBConstraint& c, Lit l) {
  const Int* a = c.coeffOf(l);
  if (!a) throw std::invalid_argument("weaken: literal " + l.toString() + " not in constraint");
  std::vector<Term> terms;
  terms.reserve(c.size() - 1);
  for (const Term& t : c.terms())
    if (t.lit != l) terms.push_back(t);
  Int degree = c.degree() - *a;
  if (degree.sign() < 0) degree = 0;
  return PBConstraint::fromCanonical(std::move(terms), std::move(degree));
}

PBConstraint saturate(const PBConstraint& c) {
  std::vector<Term> terms;
  terms.reserve(c.size());
  for (const Term& t : c.terms()) {
    Int a = min(t.coeff, c.degree());
    if (a.sign() > 0) terms.push_back({t.lit, std::move(a)});
  }
  return PBConstraint::fromCanonical(std::move(terms), c.degree());
}

PBConstraint divide(const PBConstraint& c, const Int& d) {
  if (d.sign() <= 0) throw std::invalid_argument("divide: divisor must be positive");
  std::vector<Term> terms;
  terms.reserve(c.size());
  for (const Term& t : c.terms()) terms.push_back({t.lit, ceilDiv(t.coeff, d)});
  return PBConstraint::fromCanonical(std::move(terms), ceilDiv(c.degree(), d));
}

PBConstraint mir(const PBConstraint& c, const Int& d) {
  if (d.sign() <= 0) throw std::invalid_argument("mir: divisor must be positive");
  Int r = c.degree() % d;
  if (r.isZero()) return divide(c, d);
  // Integer form of the MIR cut, multiplied through by r = b mod d:
  //   ceil(a_i/d)*r            when a_i mod d >= r or a_i mod d == 0,
  //   floor(a_i/d)*r + a_i%d   when 0 < a_i mod d < r,
  // with degree ceil(b/d)*r.
  std::vector<Term> terms;
  terms.reserve(c.size());
  for (const Term& t : c.terms()) {
    Int ri = t.coeff % d;
    Int a = (ri.isZero() || ri >= r) ? ceilDiv(t.coeff, d) * r
                                     : floorDiv(t.coeff, d) * r + ri;
    if (a.sign() > 0) terms.push_back({t.lit, std::move(a)});
  }
  return PBConstraint::fromCanonical(std::move(terms), ceilDiv(c.degree(), d) * r);
}

PBConstraint resolve(const PBConstraint& c, const PBConstraint& r, Lit l) {
  const Int* ar = r.coeffOf(l);
  if (!ar)
    throw std::invalid_argument("resolve: " + l.toString() + " does not occur in the reason");
  const Int* ac = c.coeffOf(~l);
  if (!ac)
    throw std::invalid_argument("resolve: " + (~l).toString() +
                                " does not occur in the conflict side");
  Int m = lcm(*ar, *ac);
  Int lambdaC = m / *ac;
  Int lambdaR = m / *ar;
  std::vector<std::pair<Lit, Int>> sum;
  sum.reserve(c.size() + r.size());
  for (const Term& t : c.terms()) sum.emplace_back(t.lit, t.coeff * lambdaC);
  for (const Term& t : r.terms()) sum.emplace_back(t.lit, t.coeff * lambdaR);
  PBConstraint out =
      PBConstraint::fromTerms(std::move(sum), c.degree() * lambdaC + r.degree() * lambdaR);
  assert(out.termOnVar(l.var()) == nullptr);
  return out;
}

bool satisfiedBy(const PBConstraint& c, const PartialAssignment& total) {
  Int sum = 0;
  for (const Term& t : c.terms())
    if (total.isTrue(t.lit)) sum += t.coeff;
  return sum >= c.degree();
}

std::vector<PBConstraint> normalize(const RawConstraint& raw) {
  auto build = [&](int sign) {
    std::vector<std::pair<Lit, Int>> terms;
    terms.reserve(raw.terms.size());
    for (const RawTerm& t : raw.terms)
      terms.emplace_back(t.lit, sign > 0 ? t.coeff : -t.coeff);
    return PBConstraint::fromTerms(std::move(terms),
                                   sign > 0 ? raw.rhs : -raw.rhs);
  };
  std::vector<PBConstraint> out;
  if (raw.rel == Relation::Ge || raw.rel == Relation::Eq) {
    PBConstraint c = build(+1);
    if (!c.isTautology()) out.push_back(std::move(c));
  }
  if (raw.rel == Relation::Le || raw.rel == Relation::Eq) {
    PBConstraint c = build(-1);
    if (!c.isTautology()) out.push_back(std::move(c));
  }
  return out;
}

bool satisfiedBy(const RawConstraint& c, const PartialAssignment& total) {
  Int sum = 0;
  for (const RawTerm& t : c.terms)
    if (total.isTrue(t.lit)) sum += t.coeff;
  switch (c.rel) {
    case Relation::Ge: return sum >= c.rhs;
    case Relation::Le: return sum <= c.rhs;
    case Relation::Eq: return sum == c.rhs;
  }
  return false;
}

}  // namespace cuttle
