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

#include <catch2/catch_amalgamated.hpp>

#include "cuttle/bench.hpp"
#include "testutil.hpp"

using namespace cuttle;
using namespace cuttle::test;

TEST_CASE("parses plain constraints") {
  OpbProblem p = parseOpb("+2 x1 +3 ~x2 >= 5 ;\n");
  REQUIRE(p.constraints.size() == 1);
  REQUIRE(p.constraints[0].terms.size() == 2);
  REQUIRE(p.constraints[0].terms[0].coeff == Int(2));
  REQUIRE(p.constraints[0].terms[0].lit == lit(1));
  REQUIRE(p.constraints[0].terms[1].coeff == Int(3));
  REQUIRE(p.constraints[0].terms[1].lit == lit(-2));
  REQUIRE(p.constraints[0].rel == Relation::Ge);
  REQUIRE(p.constraints[0].rhs == Int(5));
}

TEST_CASE("parses the objective") {
  OpbProblem p = parseOpb("min: +1 x1 +2 x2 ;\n+1 x1 >= 1 ;\n");
  REQUIRE(p.hasObjective);
  REQUIRE(p.objective.size() == 2);
  REQUIRE(p.objective[1].coeff == Int(2));
  REQUIRE(p.objective[1].lit == lit(2));
}

TEST_CASE("negative coefficients normalize through toProblem") {
  OpbProblem p = parseOpb("-2 x1 >= -1 ;\n");
  Problem prob = toProblem(p);
  REQUIRE(prob.constraints.size() == 1);
  REQUIRE(prob.constraints[0] == pb({{2, -1}}, 1));
}

TEST_CASE("relations and equality expansion") {
  OpbProblem p = parseOpb("+1 x1 +1 x2 <= 1 ;\n+1 x1 +1 x2 = 1 ;\n");
  REQUIRE(p.constraints[0].rel == Relation::Le);
  REQUIRE(p.constraints[1].rel == Relation::Eq);
  Problem prob = toProblem(p);
  REQUIRE(prob.constraints.size() == 3);  // <= gives one, = gives two
}

TEST_CASE("header counts are advisory") {
  OpbProblem p = parseOpb("* #variable= 5 #constraint= 1\n+1 x1 +1 x2 >= 1 ;\n");
  REQUIRE(p.headerVars == 5);
  REQUIRE(p.headerConstraints == 1);
  REQUIRE(p.warnings.size() == 1);  // 5 declared vs 2 used
  REQUIRE(toProblem(p).numVars == 5);

  OpbProblem q = parseOpb("* #variable= 2 #constraint= 2\n+1 x1 +1 x2 >= 1 ;\n");
  REQUIRE(q.warnings.size() == 1);  // constraint count mismatch
}

TEST_CASE("comments are skipped anywhere") {
  OpbProblem p = parseOpb("* a comment\n+1 x1 >= 1 ;\n* trailing\n");
  REQUIRE(p.constraints.size() == 1);
}

TEST_CASE("big coefficients survive parsing exactly") {
  OpbProblem p = parseOpb("+123456789012345678901234567890 x1 >= 1 ;\n");
  REQUIRE(p.constraints[0].terms[0].coeff ==
          Int::fromString("123456789012345678901234567890"));
}

TEST_CASE("parse errors carry line and column") {
  try {
    parseOpb("+1 x1 >= 1 ;\n+1.5 x2 >= 1 ;\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line() == 2);
    REQUIRE(std::string(e.what()).find("non-integer") != std::string::npos);
  }
  REQUIRE_THROWS_AS(parseOpb("+1 x1 > 1 ;\n"), ParseError);
  REQUIRE_THROWS_AS(parseOpb("+1 x1 >= 1\n"), ParseError);   // missing ';'
  REQUIRE_THROWS_AS(parseOpb("+1 >= 1 ;\n"), ParseError);    // missing literal
  REQUIRE_THROWS_AS(parseOpb("+1 x0 >= 1 ;\n"), ParseError); // 1-based vars
  REQUIRE_THROWS_AS(parseOpb("max: +1 x1 ;\n"), ParseError);
  REQUIRE_THROWS_AS(parseOpb("+1 x1 +1 x2 x3 >= 1 ;\n"), ParseError);  // nonlinear
}

TEST_CASE("write/parse round trip is structurally equal") {
  Rng rng(606060);
  for (int round = 0; round < 30; ++round) {
    OpbProblem p;
    p.hasObjective = rng.coin();
    int n = static_cast<int>(rng.range(1, 9));
    if (p.hasObjective) {
      int terms = static_cast<int>(rng.range(0, 4));
      for (int i = 0; i < terms; ++i)
        p.objective.push_back({Int(rng.range(-20, 20)),
                               Lit::make(static_cast<int>(rng.range(1, n)), rng.coin())});
    }
    int m = static_cast<int>(rng.range(1, 8));
    for (int i = 0; i < m; ++i) {
      RawConstraint rc;
      int len = static_cast<int>(rng.range(1, 5));
      for (int t = 0; t < len; ++t) {
        Int coeff = rng.range(-30, 30);
        if (coeff.isZero()) coeff = 1;
        rc.terms.push_back({coeff, Lit::make(static_cast<int>(rng.range(1, n)), rng.coin())});
      }
      long long r = rng.range(0, 2);
      rc.rel = r == 0 ? Relation::Ge : (r == 1 ? Relation::Le : Relation::Eq);
      rc.rhs = rng.range(-10, 10);
      p.constraints.push_back(std::move(rc));
    }
    for (const RawConstraint& rc : p.constraints)
      for (const RawTerm& t : rc.terms)
        if (t.lit.var() > p.maxVarSeen) p.maxVarSeen = t.lit.var();
    for (const RawTerm& t : p.objective)
      if (t.lit.var() > p.maxVarSeen) p.maxVarSeen = t.lit.var();

    OpbProblem back = parseOpb(writeOpb(p));
    REQUIRE(structurallyEqual(p, back));
    REQUIRE(back.warnings.empty());  // the writer emits accurate headers
  }
}

TEST_CASE("fuzzed input never crashes the parser") {
  Rng rng(707070);
  const std::string alphabet = "x~+-0123456789 ;\n*><=.minabc";
  for (int round = 0; round < 3000; ++round) {
    std::string doc;
    int len = static_cast<int>(rng.range(0, 60));
    for (int i = 0; i < len; ++i)
      doc.push_back(alphabet[static_cast<size_t>(
          rng.range(0, static_cast<long long>(alphabet.size()) - 1))]);
    try {
      parseOpb(doc);
    } catch (const ParseError&) {
      // structured failure is the contract
    }
  }
}
