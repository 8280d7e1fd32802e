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

#ifndef CUTTLE_BIGINT_HPP
#define CUTTLE_BIGINT_HPP

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cuttle {

using Wide = boost::multiprecision::cpp_int;

// Exact signed integer with a machine-word fast path. All arithmetic is
// checked; on overflow the value escalates to an arbitrary-precision
// representation and results demote back as soon as they fit a word again.
class Int {
 public:
  Int() = default;
  Int(long long v) : small_(v) {}  // implicit: integers convert freely
  Int(int v) : small_(v) {}
  explicit Int(const Wide& w) { setWide(w); }

  Int(const Int& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<Wide>(*o.big_);
  }
  Int(Int&&) noexcept = default;
  Int& operator=(const Int& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<Wide>(*o.big_) : nullptr;
    }
    return *this;
  }
  Int& operator=(Int&&) noexcept = default;

  static Int fromString(std::string_view s);

  bool fits64() const { return !big_; }
  long long as64() const {
    assert(fits64());
    return small_;
  }
  Wide toWide() const { return big_ ? *big_ : Wide(small_); }
  double toDouble() const;

  bool isZero() const { return !big_ && small_ == 0; }
  int sign() const {
    if (big_) return big_->sign();
    return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
  }

  Int& operator+=(const Int& o) {
    if (!big_ && !o.big_) {
      long long r;
      if (!__builtin_add_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    addSlow(o);
    return *this;
  }
  Int& operator-=(const Int& o) {
    if (!big_ && !o.big_) {
      long long r;
      if (!__builtin_sub_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    subSlow(o);
    return *this;
  }
  Int& operator*=(const Int& o) {
    if (!big_ && !o.big_) {
      long long r;
      if (!__builtin_mul_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    mulSlow(o);
    return *this;
  }

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }
  Int operator-() const;

  // Truncating division and remainder, same semantics as C++ integers.
  friend Int operator/(const Int& a, const Int& b);
  friend Int operator%(const Int& a, const Int& b);

  friend bool operator==(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return a.cmpSlow(b) == 0;
  }
  friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
  friend bool operator<(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ < b.small_;
    return a.cmpSlow(b) < 0;
  }
  friend bool operator>(const Int& a, const Int& b) { return b < a; }
  friend bool operator<=(const Int& a, const Int& b) { return !(b < a); }
  friend bool operator>=(const Int& a, const Int& b) { return !(a < b); }

  std::string toString() const;
  friend std::ostream& operator<<(std::ostream& os, const Int& v);

 private:
  void setWide(const Wide& w);
  void addSlow(const Int& o);
  void subSlow(const Int& o);
  void mulSlow(const Int& o);
  int cmpSlow(const Int& o) const;

  long long small_ = 0;
  std::unique_ptr<Wide> big_;  // engaged only while the value needs it
};

Int abs(const Int& v);
const Int& min(const Int& a, const Int& b);
const Int& max(const Int& a, const Int& b);
// Floor/ceil division; divisor must be nonzero.
Int floorDiv(const Int& a, const Int& b);
Int ceilDiv(const Int& a, const Int& b);
bool divides(const Int& d, const Int& a);  // d | a, d nonzero
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace cuttle

#endif  // CUTTLE_BIGINT_HPP
