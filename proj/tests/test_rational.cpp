/*
   Copyright 2026 The bifurcata Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "bifurcata/rational.hpp"

using namespace bifurcata;

TEST(Rational, MakeRationalIsCanonical) {
  const Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_GT(q.get_den(), 0);
}

TEST(Rational, DyadicRounding) {
  const Rational third(1, 3);
  const Rational lo = round_down(third, 8), hi = round_up(third, 8);
  EXPECT_LE(lo, third);
  EXPECT_GE(hi, third);
  EXPECT_EQ(hi - lo, Rational(1, 256));
  EXPECT_EQ(round_down(Rational(3, 4), 8), Rational(3, 4));
}

TEST(Rational, SquareRootBounds) {
  for (int n : {2, 3, 5, 10, 1000}) {
    const Rational q(n);
    const Rational lo = sqrt_down(q, 20), hi = sqrt_up(q, 20);
    EXPECT_LE(lo * lo, q);
    EXPECT_GE(hi * hi, q);
    EXPECT_LE(hi - lo, Rational(1, 1 << 19));
  }
  EXPECT_EQ(sqrt_down(Rational(9, 4), 10), Rational(3, 2));
}

TEST(Rational, SimplestBetween) {
  EXPECT_EQ(simplest_between(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(simplest_between(Rational(13, 10), Rational(7, 5)), Rational(4, 3));
  EXPECT_EQ(simplest_between(Rational(-7, 5), Rational(-13, 10)), Rational(-4, 3));
  EXPECT_EQ(simplest_between(Rational(-1, 2), Rational(1, 2)), Rational(0));
}

TEST(Interval, ArithmeticEnclosesExactValues) {
  const Interval a(Rational(1), Rational(2)), b(Rational(-3), Rational(1, 2));
  const Interval p = a * b;
  EXPECT_EQ(p.lo, Rational(-6));
  EXPECT_EQ(p.hi, Rational(1));
  EXPECT_EQ((a + b).lo, Rational(-2));
  EXPECT_EQ((a - b).hi, Rational(5));
  EXPECT_EQ(a.certain_sign(), 1);
  EXPECT_EQ(b.certain_sign(), 0);
}
