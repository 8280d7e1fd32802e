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

#ifndef CUTTLE_OPB_HPP
#define CUTTLE_OPB_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cuttle/solver.hpp"

namespace cuttle {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + what),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

// A structurally parsed OPB document: raw inequalities with relations
// {>=, <=, =}, an optional "min:" objective, and advisory header counts.
struct OpbProblem {
  std::optional<long long> headerVars;
  std::optional<long long> headerConstraints;
  bool hasObjective = false;
  std::vector<RawTerm> objective;
  std::vector<RawConstraint> constraints;
  int maxVarSeen = 0;
  std::vector<std::string> warnings;  // e.g. stale header counts
};

bool operator==(const RawTerm& a, const RawTerm& b);
bool operator==(const RawConstraint& a, const RawConstraint& b);
// Same objective and constraints; header counts and warnings are advisory.
bool structurallyEqual(const OpbProblem& a, const OpbProblem& b);

OpbProblem parseOpb(std::string_view text);
std::string writeOpb(const OpbProblem& p);

// Normalizes every constraint; keeps the raw originals for model checks.
Problem toProblem(const OpbProblem& p);

}  // namespace cuttle

#endif  // CUTTLE_OPB_HPP
