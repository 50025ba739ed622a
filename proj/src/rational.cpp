// SPDX-License-Identifier: Apache-2.0
#include "graphopt/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "graphopt/error.hpp"

namespace graphopt {

namespace {

using i128 = __int128;

Rational make(i128 num, i128 den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr i128 lo = std::numeric_limits<std::int64_t>::min() + 1;
  constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw Error(Errc::InvalidArgument, "rational overflow");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    throw Error(Errc::MalformedRational, "cannot parse '" + std::string(whole) + "' as a rational");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t p = parse_int(text.substr(0, slash), text);
    std::int64_t q = parse_int(text.substr(slash + 1), text);
    if (q == 0) throw Error(Errc::MalformedRational, "zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (negative || (!int_part.empty() && int_part.front() == '+')) int_part.remove_prefix(1);
    if (frac.empty() || frac.size() > 17 || frac.find_first_not_of("0123456789") != std::string_view::npos) {
      throw Error(Errc::MalformedRational, "cannot parse '" + std::string(text) + "' as a rational");
    }
    std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    if (whole < 0) throw Error(Errc::MalformedRational, "cannot parse '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r = make(static_cast<i128>(whole) * scale + parse_int(frac, text), scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(text, text));
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(Errc::InvalidArgument, "division by zero rational");
  return make(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace graphopt
