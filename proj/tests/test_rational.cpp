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


#include "faircomp/rational.hpp"

#include <gtest/gtest.h>

#include <numeric>

using faircomp::BigInt;
using faircomp::parse_rational;
using faircomp::ParseError;
using faircomp::Rational;

TEST(Rational, ParsesDecimalsExactly) {
  EXPECT_EQ(parse_rational("4.25"), Rational(17, 4));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-0.5"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("007"), Rational(7));
}

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("3").denominator(), BigInt(1));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("11550/67").str(), "11550/67");
}

TEST(Rational, NormalizesLikeAnIndependentGcd) {
  // Reduce by std::gcd and compare with the stored form.
  for (std::int64_t n = -30; n <= 30; ++n)
    for (std::int64_t d = 1; d <= 30; ++d) {
      std::int64_t g = std::gcd(n < 0 ? -n : n, d);
      Rational r = parse_rational(std::to_string(n) + "/" + std::to_string(d));
      EXPECT_EQ(r.numerator(), BigInt(n / g));
      EXPECT_EQ(r.denominator(), BigInt(d / g));
    }
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "-", "1/0", "a", "1.2.3", "1/", "/2", " 1", "1e3", "1/-2", "."})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, ArithmeticAndOrdering) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_LT(b, a);
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_EQ(abs(Rational(-5, 2)), Rational(5, 2));
}

TEST(Rational, Renders) {
  EXPECT_EQ(Rational(5, 3).str(), "5/3");
  EXPECT_EQ(Rational(-4).str(), "-4");
  EXPECT_EQ(Rational(5, 3).to_decimal(6), "1.666667");
  EXPECT_EQ(Rational(1, 3).to_decimal(6), "0.333333");
  EXPECT_EQ(Rational(-1, 8).to_decimal(2), "-0.13");
  EXPECT_EQ(Rational(2).to_decimal(6), "2.000000");
  EXPECT_EQ(Rational(11550, 67).to_decimal(2), "172.39");
}
