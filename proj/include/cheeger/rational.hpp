#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cheeger/errors.hpp"

namespace cheeger {

class RationalOverflow : public std::overflow_error {
 public:
  explicit RationalOverflow(const std::string& what) : std::overflow_error(what) {}
};

// Exact fraction in lowest terms, denominator > 0.  Components are 64-bit;
// every operation runs its intermediates through 128 bits and throws
// RationalOverflow if the reduced result does not fit back into 64 bits.
// There is deliberately no silent wraparound and no conversion to float
// anywhere in the arithmetic.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit
  Rational(long long num, long long den) { *this = make(num, den); }

  // Accepts "p" or "p/q" with an optional leading minus sign.
  static Rational parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  // "p" when the value is an integer, "p/q" otherwise.
  std::string str() const;
  // Decimal rendering for human-readable columns only; never fed back in.
  double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division of Rational by zero");
    return make_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  using i128 = __int128;
  using u128 = unsigned __int128;

  static Rational make(long long num, long long den) { return make_i128(num, den); }
  static Rational make_i128(i128 num, i128 den);

  long long num_;
  long long den_;
};

}  // namespace cheeger
