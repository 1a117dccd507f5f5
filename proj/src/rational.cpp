#include "cheeger/rational.hpp"

#include <limits>

namespace cheeger {

namespace {

using u128 = unsigned __int128;

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::make_i128(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("Rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 a = num < 0 ? u128(-num) : u128(num);
  u128 g = num == 0 ? u128(den) : gcd_u128(a, u128(den));
  num /= i128(g);
  den /= i128(g);
  constexpr i128 lo = std::numeric_limits<long long>::min();
  constexpr i128 hi = std::numeric_limits<long long>::max();
  if (num < lo || num > hi || den > hi)
    throw RationalOverflow("Rational does not fit 64-bit components after reduction");
  Rational r;
  r.num_ = static_cast<long long>(num);
  r.den_ = static_cast<long long>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { throw ParseError("bad rational '" + std::string(text) + "', expected p or p/q"); };
  if (text.empty()) bad();
  size_t slash = text.find('/');
  auto parse_ll = [&](std::string_view s) -> long long {
    if (s.empty()) bad();
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-') {
      neg = true;
      i = 1;
      if (s.size() == 1) bad();
    }
    i128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') bad();
      v = v * 10 + (s[i] - '0');
      if (v > i128(std::numeric_limits<long long>::max()) + 1) bad();
    }
    if (neg) v = -v;
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max()) bad();
    return static_cast<long long>(v);
  };
  if (slash == std::string_view::npos) return Rational(parse_ll(text));
  long long num = parse_ll(text.substr(0, slash));
  long long den = parse_ll(text.substr(slash + 1));
  if (den == 0) bad();
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

}  // namespace cheeger
