#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include "madkit/errors.hpp"

namespace madkit {

// 128-bit signed integer used for every exact quantity (numerators,
// denominators, scaled capacities before they are narrowed for the flow core).
using WideInt = __int128;

namespace wide {

inline WideInt add(WideInt a, WideInt b) {
  WideInt r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("128-bit addition overflow");
  return r;
}

inline WideInt sub(WideInt a, WideInt b) {
  WideInt r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("128-bit subtraction overflow");
  return r;
}

inline WideInt mul(WideInt a, WideInt b) {
  WideInt r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("128-bit multiplication overflow");
  return r;
}

inline WideInt abs(WideInt a) { return a < 0 ? sub(0, a) : a; }

inline WideInt gcd(WideInt a, WideInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    WideInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Floor division for positive divisor.
inline WideInt floorDiv(WideInt a, WideInt b) {
  WideInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::string toString(WideInt v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Work on the negative side so the minimum value does not overflow.
  if (!neg) v = -v;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (neg) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

inline WideInt parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer");
  bool neg = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw ParseError("integer has no digits: '" + std::string(text) + "'");
  WideInt v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw ParseError("bad digit in integer: '" + std::string(text) + "'");
    v = sub(mul(v, 10), c - '0');
  }
  return neg ? v : sub(0, v);
}

inline std::int64_t narrow(WideInt v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace wide

// Exact fraction in lowest terms with a positive denominator. Every operation
// is exact; overflow of the 128-bit representation throws instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(WideInt num, WideInt den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    normalize();
  }

  static Rational fromWide(WideInt value) { return Rational(value, 1); }

  WideInt num() const noexcept { return num_; }
  WideInt den() const noexcept { return den_; }
  bool isInteger() const noexcept { return den_ == 1; }

  WideInt floor() const { return wide::floorDiv(num_, den_); }
  WideInt ceil() const { return -wide::floorDiv(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    WideInt g = wide::gcd(a.den_, b.den_);
    WideInt num = wide::add(wide::mul(a.num_, b.den_ / g), wide::mul(b.num_, a.den_ / g));
    return Rational(num, wide::mul(a.den_ / g, b.den_));
  }
  friend Rational operator-(const Rational& a) { return Rational(wide::sub(0, a.num_), a.den_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    WideInt g1 = wide::gcd(a.num_, b.den_);
    WideInt g2 = wide::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational(wide::mul(a.num_ / g1, b.num_ / g2), wide::mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return a * Rational(b.den_, b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return compareWide(a.num_, b.num_);
    return compareWide(wide::mul(a.num_, b.den_), wide::mul(b.num_, a.den_));
  }

  std::string toString() const { return wide::toString(num_) + "/" + wide::toString(den_); }

  // Accepts "p/q" or an integer "p".
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return fromWide(wide::parse(text));
    WideInt den = wide::parse(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(wide::parse(text.substr(0, slash)), den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.toString(); }

 private:
  static std::strong_ordering compareWide(WideInt a, WideInt b) {
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = wide::sub(0, num_);
      den_ = wide::sub(0, den_);
    }
    WideInt g = wide::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  WideInt num_ = 0;
  WideInt den_ = 1;
};

// The value of mad: negative infinity for the graph with no vertices,
// otherwise an exact rational.
class MadValue {
 public:
  MadValue(Rational value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  MadValue(std::int64_t value) : value_(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  static MadValue negativeInfinity() { return MadValue(); }

  bool isNegativeInfinity() const noexcept { return !value_.has_value(); }
  const Rational& value() const {
    if (!value_) throw std::logic_error("mad value is -inf");
    return *value_;
  }

  // -inf absorbs any finite shift.
  friend MadValue operator-(const MadValue& a, const Rational& shift) {
    if (a.isNegativeInfinity()) return a;
    return MadValue(a.value() - shift);
  }

  friend bool operator==(const MadValue& a, const MadValue& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const MadValue& a, const MadValue& b) {
    if (a.isNegativeInfinity() || b.isNegativeInfinity()) {
      return static_cast<int>(!a.isNegativeInfinity()) <=> static_cast<int>(!b.isNegativeInfinity());
    }
    return a.value() <=> b.value();
  }

  std::string toString() const { return value_ ? value_->toString() : "-inf"; }

  static MadValue parse(std::string_view text) {
    if (text == "-inf") return negativeInfinity();
    return MadValue(Rational::parse(text));
  }

  friend std::ostream& operator<<(std::ostream& os, const MadValue& m) { return os << m.toString(); }

 private:
  MadValue() = default;
  std::optional<Rational> value_;
};

namespace detail {

struct Bound {
  Rational value;
  bool closed;
};

// Fraction with the smallest denominator inside the interval between lo and
// hi (hi may be +infinity). Continued-fraction descent; terminates because
// every reciprocal step strictly shrinks the denominators involved.
inline Rational simplestBetween(Bound lo, std::optional<Bound> hi) {
  WideInt first = lo.value.isInteger() && lo.closed ? lo.value.num() : wide::add(lo.value.floor(), 1);
  Rational candidate = Rational::fromWide(first);
  if (!hi || candidate < hi->value || (candidate == hi->value && hi->closed)) return candidate;

  // No integer inside: both ends lie in (f, f + 1).
  WideInt f = lo.value.floor();
  Rational fr = Rational::fromWide(f);
  Rational hiFrac = hi->value - fr;
  Rational loFrac = lo.value - fr;
  Bound recipLo{Rational(1) / hiFrac, hi->closed};
  std::optional<Bound> recipHi;
  if (loFrac.num() != 0) recipHi = Bound{Rational(1) / loFrac, lo.closed};
  return fr + Rational(1) / simplestBetween(recipLo, recipHi);
}

// Inverse of a modulo m (m > 1, gcd(a, m) = 1), in [0, m).
inline WideInt modInverse(WideInt a, WideInt m) {
  WideInt oldR = a - wide::floorDiv(a, m) * m, curR = m;
  WideInt oldS = 1, curS = 0;
  while (curR != 0) {
    WideInt q = oldR / curR;
    std::tie(oldR, curR) = std::pair<WideInt, WideInt>{curR, oldR - q * curR};
    std::tie(oldS, curS) = std::pair<WideInt, WideInt>{curS, oldS - q * curS};
  }
  if (oldR != 1) throw ContractViolation("modInverse of non-coprime values");
  WideInt inv = oldS % m;
  return inv < 0 ? inv + m : inv;
}

// Neighbour of p/q in the Farey sequence of order maxDen (q <= maxDen).
// Right neighbour r/s solves r q - p s = 1, left neighbour p s - r q = 1,
// with s <= maxDen as large as possible.
inline Rational fareyNeighbour(const Rational& r, WideInt maxDen, bool right) {
  WideInt p = r.num(), q = r.den();
  WideInt s0 = 0;
  if (q != 1) {
    s0 = modInverse(p, q);
    if (right) s0 = (q - s0) % q;
  }
  WideInt s = s0 + q * wide::floorDiv(maxDen - s0, q);
  WideInt numer = right ? wide::add(1, wide::mul(p, s)) : wide::sub(wide::mul(p, s), 1);
  return Rational(numer / q, s);
}

}  // namespace detail

// The unique fraction with denominator <= maxDen in (lo, hi]. Throws
// ContractViolation when the interval holds none or more than one.
inline Rational snapToBoundedDenominator(const Rational& lo, const Rational& hi, WideInt maxDen) {
  if (maxDen < 1) throw std::invalid_argument("maxDen must be positive");
  if (!(lo < hi)) throw ContractViolation("snap interval is empty: " + lo.toString() + " >= " + hi.toString());
  Rational best = detail::simplestBetween({lo, false}, detail::Bound{hi, true});
  if (best.den() > maxDen) {
    throw ContractViolation("no fraction with denominator <= " + wide::toString(maxDen) + " in (" +
                            lo.toString() + ", " + hi.toString() + "]");
  }
  Rational right = detail::fareyNeighbour(best, maxDen, true);
  Rational left = detail::fareyNeighbour(best, maxDen, false);
  if (right <= hi || left > lo) {
    throw ContractViolation("more than one fraction with denominator <= " + wide::toString(maxDen) +
                            " in (" + lo.toString() + ", " + hi.toString() + "]");
  }
  return best;
}

// Smallest-denominator fraction in the closed interval [lo, hi].
inline Rational simplestInClosed(const Rational& lo, const Rational& hi) {
  return detail::simplestBetween({lo, true}, detail::Bound{hi, true});
}

}  // namespace madkit
