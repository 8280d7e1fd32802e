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

#ifndef CUTTLE_LITERAL_HPP
#define CUTTLE_LITERAL_HPP

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace cuttle {

// A literal over 1-based Boolean variables: x_v or its negation ~x_v = 1 - x_v.
// Encoded as a signed variable index, DIMACS style.
class Lit {
 public:
  Lit() = default;  // invalid sentinel, var() == 0
  static Lit pos(int var) {
    assert(var >= 1);
    return Lit(var);
  }
  static Lit neg(int var) {
    assert(var >= 1);
    return Lit(-var);
  }
  static Lit make(int var, bool negated) { return negated ? neg(var) : pos(var); }

  int var() const { return std::abs(code_); }
  bool negated() const { return code_ < 0; }
  bool valid() const { return code_ != 0; }
  Lit operator~() const { return Lit(-code_); }

  // Dense index for per-literal tables: 2*var + (negated ? 1 : 0).
  int index() const { return 2 * var() + (negated() ? 1 : 0); }
  int code() const { return code_; }

  friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend bool operator!=(Lit a, Lit b) { return a.code_ != b.code_; }
  friend bool operator<(Lit a, Lit b) {
    return a.var() != b.var() ? a.var() < b.var() : a.code_ > b.code_;
  }

  std::string toString() const {
    return (negated() ? "~x" : "x") + std::to_string(var());
  }

 private:
  explicit Lit(int code) : code_(code) {}
  int32_t code_ = 0;
};

enum class LitValue : int8_t { False = 0, True = 1, Free = -1 };

// Partial map from variables to {0,1}; unassigned variables are free.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(int numVars) : val_(numVars + 1, -1) {}

  int numVars() const { return static_cast<int>(val_.size()) - 1; }

  void set(int var, bool value) {
    grow(var);
    val_[var] = value ? 1 : 0;
  }
  // Makes the literal itself true.
  void assign(Lit l) { set(l.var(), !l.negated()); }
  void unassign(int var) {
    if (var < static_cast<int>(val_.size())) val_[var] = -1;
  }

  bool isAssigned(int var) const {
    return var < static_cast<int>(val_.size()) && val_[var] >= 0;
  }
  // 0/1 value of the variable; pre: assigned.
  int varValue(int var) const {
    assert(isAssigned(var));
    return val_[var];
  }
  LitValue value(Lit l) const {
    if (!isAssigned(l.var())) return LitValue::Free;
    int v = val_[l.var()];
    bool truth = l.negated() ? v == 0 : v == 1;
    return truth ? LitValue::True : LitValue::False;
  }
  bool isFalse(Lit l) const { return value(l) == LitValue::False; }
  bool isTrue(Lit l) const { return value(l) == LitValue::True; }
  bool isFree(Lit l) const { return value(l) == LitValue::Free; }

 private:
  void grow(int var) {
    if (var >= static_cast<int>(val_.size())) val_.resize(var + 1, -1);
  }
  std::vector<int8_t> val_;
};

}  // namespace cuttle

#endif  // CUTTLE_LITERAL_HPP
