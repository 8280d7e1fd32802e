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

#include "cuttle/opb.hpp"

#include <cctype>
#include <sstream>

namespace cuttle {

namespace {

struct Lexer {
  std::string_view text;
  size_t at = 0;
  int line = 1, col = 1;

  char peek() const { return at < text.size() ? text[at] : '\0'; }
  char peek2() const { return at + 1 < text.size() ? text[at + 1] : '\0'; }
  bool eof() const { return at >= text.size(); }

  void advance() {
    if (text[at] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++at;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line, col, what); }

  void skipSpace() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  // Reads a comment line; returns its text without the leading '*'.
  std::string comment() {
    std::string out;
    advance();  // '*'
    while (!eof() && peek() != '\n') {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  Int number() {
    std::string digits;
    if (peek() == '+' || peek() == '-') {
      if (peek() == '-') digits.push_back('-');
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      advance();
    }
    if (peek() == '.') fail("non-integer coefficient");
    return Int::fromString(digits);
  }

  Lit literal() {
    bool neg = false;
    if (peek() == '~') {
      neg = true;
      advance();
    }
    if (peek() != 'x') fail("expected a literal like x3 or ~x3");
    advance();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > INT32_MAX) fail("variable index out of range");
      advance();
    }
    if (v < 1) fail("variable indices are 1-based");
    return Lit::make(static_cast<int>(v), neg);
  }
};

void parseHeader(const std::string& comment, OpbProblem& out) {
  // "* #variable= N #constraint= M" (counts are advisory).
  std::istringstream is(comment);
  std::string tag;
  long long vars = 0, cons = 0;
  if (is >> tag && tag == "#variable=" && is >> vars && is >> tag &&
      tag == "#constraint=" && is >> cons) {
    out.headerVars = vars;
    out.headerConstraints = cons;
  }
}

}  // namespace

bool operator==(const RawTerm& a, const RawTerm& b) {
  return a.coeff == b.coeff && a.lit == b.lit;
}

bool operator==(const RawConstraint& a, const RawConstraint& b) {
  return a.rel == b.rel && a.rhs == b.rhs && a.terms == b.terms;
}

bool structurallyEqual(const OpbProblem& a, const OpbProblem& b) {
  return a.hasObjective == b.hasObjective && a.objective == b.objective &&
         a.constraints == b.constraints;
}

OpbProblem parseOpb(std::string_view text) {
  OpbProblem out;
  Lexer lx{text};
  bool sawHeaderCandidate = false;

  auto noteVar = [&](Lit l) {
    if (l.var() > out.maxVarSeen) out.maxVarSeen = l.var();
  };

  while (true) {
    lx.skipSpace();
    if (lx.eof()) break;
    if (lx.peek() == '*') {
      std::string c = lx.comment();
      if (!sawHeaderCandidate) {
        parseHeader(c, out);
        sawHeaderCandidate = true;
      }
      continue;
    }
    if (lx.peek() == 'm') {
      // "min:" objective line.
      int line = lx.line, col = lx.col;
      std::string word;
      while (std::isalpha(static_cast<unsigned char>(lx.peek()))) {
        word.push_back(lx.peek());
        lx.advance();
      }
      if (word != "min" || lx.peek() != ':') throw ParseError(line, col, "unknown keyword '" + word + "'");
      lx.advance();  // ':'
      if (out.hasObjective) throw ParseError(line, col, "duplicate objective");
      out.hasObjective = true;
      lx.skipSpace();
      while (lx.peek() != ';') {
        if (lx.eof()) lx.fail("unterminated objective (missing ';')");
        Int coeff = lx.number();
        lx.skipSpace();
        Lit l = lx.literal();
        noteVar(l);
        out.objective.push_back({std::move(coeff), l});
        lx.skipSpace();
      }
      lx.advance();  // ';'
      continue;
    }

    // A constraint: coefficient/literal pairs, a relation, the rhs, ';'.
    RawConstraint rc;
    while (true) {
      lx.skipSpace();
      if (lx.eof()) lx.fail("unterminated constraint (missing ';')");
      char c = lx.peek();
      if (c == '>' || c == '<' || c == '=') break;
      Int coeff = lx.number();
      lx.skipSpace();
      if (lx.peek() == '>' || lx.peek() == '<' || lx.peek() == '=' || lx.peek() == ';')
        lx.fail("coefficient without a literal");
      Lit l = lx.literal();
      noteVar(l);
      rc.terms.push_back({std::move(coeff), l});
    }
    if (lx.peek() == '>') {
      if (lx.peek2() != '=') lx.fail("unknown relation, expected >=, <= or =");
      lx.advance();
      lx.advance();
      rc.rel = Relation::Ge;
    } else if (lx.peek() == '<') {
      if (lx.peek2() != '=') lx.fail("unknown relation, expected >=, <= or =");
      lx.advance();
      lx.advance();
      rc.rel = Relation::Le;
    } else {
      lx.advance();
      rc.rel = Relation::Eq;
    }
    lx.skipSpace();
    rc.rhs = lx.number();
    lx.skipSpace();
    if (lx.peek() != ';') lx.fail("expected ';' after constraint");
    lx.advance();
    out.constraints.push_back(std::move(rc));
  }

  if (out.headerVars && *out.headerVars != out.maxVarSeen)
    out.warnings.push_back("header declares " + std::to_string(*out.headerVars) +
                           " variables but the largest index used is " +
                           std::to_string(out.maxVarSeen));
  if (out.headerConstraints &&
      *out.headerConstraints != static_cast<long long>(out.constraints.size()))
    out.warnings.push_back("header declares " + std::to_string(*out.headerConstraints) +
                           " constraints but " + std::to_string(out.constraints.size()) +
                           " were read");
  return out;
}

std::string writeOpb(const OpbProblem& p) {
  std::ostringstream os;
  long long vars = p.headerVars ? std::max<long long>(*p.headerVars, p.maxVarSeen)
                                : p.maxVarSeen;
  os << "* #variable= " << vars << " #constraint= " << p.constraints.size() << "\n";
  auto emitTerm = [&](const RawTerm& t) {
    os << (t.coeff.sign() < 0 ? "" : "+") << t.coeff << " " << t.lit.toString() << " ";
  };
  if (p.hasObjective) {
    os << "min: ";
    for (const RawTerm& t : p.objective) emitTerm(t);
    os << ";\n";
  }
  for (const RawConstraint& c : p.constraints) {
    for (const RawTerm& t : c.terms) emitTerm(t);
    switch (c.rel) {
      case Relation::Ge: os << ">= "; break;
      case Relation::Le: os << "<= "; break;
      case Relation::Eq: os << "= "; break;
    }
    os << c.rhs << " ;\n";
  }
  return os.str();
}

Problem toProblem(const OpbProblem& p) {
  Problem out;
  out.numVars = p.maxVarSeen;
  if (p.headerVars && *p.headerVars > out.numVars)
    out.numVars = static_cast<int>(*p.headerVars);
  for (const RawConstraint& rc : p.constraints) {
    for (PBConstraint& c : normalize(rc)) out.constraints.push_back(std::move(c));
    out.raw.push_back(rc);
  }
  out.hasObjective = p.hasObjective;
  out.objective = p.objective;
  return out;
}

}  // namespace cuttle
