// Copyright 2026 The faircomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRCOMP_RATIONAL_HPP
#define FAIRCOMP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace faircomp {

using BigInt = boost::multiprecision::cpp_int;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = value_type(num, den);
  }
  explicit Rational(value_type v) : v_(std::move(v)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  const value_type& raw() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(value_type(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = a.v_.compare(b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "n" for integers, "n/d" otherwise.
  std::string str() const {
    BigInt d = denominator();
    if (d == 1) return numerator().str();
    return numerator().str() + "/" + d.str();
  }

  // Decimal rendering rounded half away from zero to `digits` places.
  std::string to_decimal(unsigned digits = 6) const {
    BigInt scale = 1;
    for (unsigned k = 0; k < digits; ++k) scale *= 10;
    BigInt num = numerator();
    BigInt den = denominator();
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scaled = (num * scale * 2 + den) / (den * 2);
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = (negative && scaled != 0) ? "-" : "";
    out += whole.str();
    if (digits > 0) {
      std::string f = frac.str();
      out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
  }

  double to_double() const { return v_.convert_to<double>(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  value_type v_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Accepts `[-]digits[.digits]` and `[-]digits/digits`. Decimals are exact.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) {
    throw ParseError(std::string("invalid rational '") + std::string(text) + "': " + why);
  };
  // Digit-by-digit: cpp_int's string constructor reads a leading 0 as octal.
  auto to_int = [](std::string_view s) {
    BigInt v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
  };
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  BigInt num;
  BigInt den = 1;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view n = body.substr(0, slash);
    std::string_view d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) fail("expected digits/digits");
    num = to_int(n);
    den = to_int(d);
    if (den == 0) fail("zero denominator");
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view w = body.substr(0, dot);
    std::string_view f = body.substr(dot + 1);
    if (!all_digits(w) || !all_digits(f)) fail("expected digits.digits");
    num = to_int(w);
    for (char c : f) num = num * 10 + (c - '0');
    for (std::size_t k = 0; k < f.size(); ++k) den *= 10;
  } else {
    if (!all_digits(body)) fail("expected digits");
    num = to_int(body);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace faircomp

#endif  // FAIRCOMP_RATIONAL_HPP
