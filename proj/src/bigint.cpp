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

#include "cuttle/bigint.hpp"

#include <climits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cuttle {

namespace {
const Wide kMin64 = Wide(LLONG_MIN);
const Wide kMax64 = Wide(LLONG_MAX);
}  // namespace

void Int::setWide(const Wide& w) {
  if (w >= kMin64 && w <= kMax64) {
    small_ = w.convert_to<long long>();
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<Wide>(w);
  }
}

Int Int::fromString(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
    throw std::invalid_argument("Int::fromString: not an integer");
  // strip leading zeros: cpp_int would read them as an octal prefix
  size_t firstDigit = s.find_first_not_of('0');
  if (firstDigit == std::string_view::npos) return 0;
  s.remove_prefix(firstDigit);
  Int r;
  r.setWide(Wide(std::string(s)));
  return negative ? -r : r;
}

double Int::toDouble() const {
  return big_ ? big_->convert_to<double>() : static_cast<double>(small_);
}

void Int::addSlow(const Int& o) { setWide(toWide() + o.toWide()); }
void Int::subSlow(const Int& o) { setWide(toWide() - o.toWide()); }
void Int::mulSlow(const Int& o) { setWide(toWide() * o.toWide()); }

int Int::cmpSlow(const Int& o) const {
  Wide a = toWide(), b = o.toWide();
  return a < b ? -1 : (a > b ? 1 : 0);
}

Int Int::operator-() const {
  if (!big_ && small_ != LLONG_MIN) {
    Int r;
    r.small_ = -small_;
    return r;
  }
  Int r;
  r.setWide(-toWide());
  return r;
}

Int operator/(const Int& a, const Int& b) {
  assert(!b.isZero());
  if (!a.big_ && !b.big_ && !(a.small_ == LLONG_MIN && b.small_ == -1)) {
    Int r;
    r.small_ = a.small_ / b.small_;
    return r;
  }
  return Int(Wide(a.toWide() / b.toWide()));
}

Int operator%(const Int& a, const Int& b) {
  assert(!b.isZero());
  if (!a.big_ && !b.big_ && !(a.small_ == LLONG_MIN && b.small_ == -1)) {
    Int r;
    r.small_ = a.small_ % b.small_;
    return r;
  }
  return Int(Wide(a.toWide() % b.toWide()));
}

std::string Int::toString() const {
  return big_ ? big_->str() : std::to_string(small_);
}

std::ostream& operator<<(std::ostream& os, const Int& v) {
  return os << v.toString();
}

Int abs(const Int& v) { return v.sign() < 0 ? -v : v; }

const Int& min(const Int& a, const Int& b) { return b < a ? b : a; }
const Int& max(const Int& a, const Int& b) { return a < b ? b : a; }

Int floorDiv(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a % b;
  // Truncation rounds toward zero; fix up when signs disagree.
  if (!r.isZero() && ((r.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Int ceilDiv(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a % b;
  if (!r.isZero() && ((r.sign() < 0) == (b.sign() < 0))) q += 1;
  return q;
}

bool divides(const Int& d, const Int& a) { return (a % d).isZero(); }

Int gcd(const Int& a, const Int& b) {
  if (a.fits64() && b.fits64() && a.as64() != LLONG_MIN && b.as64() != LLONG_MIN) {
    unsigned long long x = a.as64() < 0 ? -static_cast<unsigned long long>(a.as64())
                                        : static_cast<unsigned long long>(a.as64());
    unsigned long long y = b.as64() < 0 ? -static_cast<unsigned long long>(b.as64())
                                        : static_cast<unsigned long long>(b.as64());
    return Int(static_cast<long long>(std::gcd(x, y)));
  }
  return Int(Wide(boost::multiprecision::gcd(a.toWide(), b.toWide())));
}

Int lcm(const Int& a, const Int& b) {
  if (a.isZero() || b.isZero()) return 0;
  Int g = gcd(a, b);
  return abs((a / g) * b);
}

}  // namespace cuttle
