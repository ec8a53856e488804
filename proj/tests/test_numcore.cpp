// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include <cmath>

using namespace testing_support;

TEST(Numcore, GcdAndDivision) {
  EXPECT_EQ(gcd(12, -18), 6);
  EXPECT_EQ(gcd(0, 0), 0);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(ceil_div(7, 2), 4);
}

TEST(Numcore, IntegerSquareRoot) {
  for (long long n = 0; n < 5000; ++n) {
    Int r = isqrt(n);
    EXPECT_TRUE(r * r <= n && (r + 1) * (r + 1) > n) << n;
    EXPECT_EQ(is_square(n), r * r == n);
  }
  Int big = Int(1) << 200;
  EXPECT_EQ(isqrt(big), Int(1) << 100);
}

TEST(Numcore, ParseInt) {
  EXPECT_EQ(parse_int("-123456789012345678901234567890").str(), "-123456789012345678901234567890");
  EXPECT_EQ(error_kind([] { parse_int("12a"); }), "ParseError");
  EXPECT_EQ(error_kind([] { parse_int(""); }), "ParseError");
}

TEST(Numcore, NormalizeAndOrder) {
  EXPECT_EQ(normalize(-6, -4), (ProjRational{3, 2}));
  EXPECT_EQ(normalize(6, -4), (ProjRational{-3, 2}));
  EXPECT_EQ(normalize(-5, 0), (ProjRational{1, 0}));
  EXPECT_EQ(error_kind([] { normalize(0, 0); }), "BothZero");
  EXPECT_LT(parse_rational("7/5"), parse_rational("3/2"));
  EXPECT_LT(parse_rational("1000/1"), parse_rational("1/0"));
  EXPECT_LT(parse_rational("-1/2"), parse_rational("0/1"));
}

TEST(Numcore, MediantsAreFareyNeighbours) {
  ProjRational a{0, 1}, b{1, 0};
  for (int i = 0; i < 30; ++i) {
    ProjRational m = mediant(a, b);
    EXPECT_TRUE(is_farey_edge(a, m));
    EXPECT_TRUE(is_farey_edge(m, b));
    (i % 3 == 0 ? a : b) = m;
  }
  EXPECT_FALSE(is_farey_edge({1, 1}, {3, 1}));
}

TEST(Numcore, Surds) {
  EXPECT_EQ(error_kind([] { make_surd(1, 2, 9); }), "NotIrrational");
  EXPECT_EQ(error_kind([] { make_surd(1, 0, 5); }), "OutOfRange");
  QuadSurd x = make_surd(1, 3, 7);  // 3 does not divide 7 - 1, so it is rescaled
  EXPECT_EQ((x.d - x.p * x.p) % x.q, 0);
  for (long long p = -6; p <= 6; ++p)
    for (long long q : {-5LL, -2LL, 1LL, 3LL, 7LL})
      for (long long d : {2LL, 3LL, 5LL, 13LL, 50LL}) {
        QuadSurd s = make_surd(p, q, d);
        double v = (static_cast<double>(p) + std::sqrt(static_cast<double>(d))) / static_cast<double>(q);
        EXPECT_EQ(surd_floor(s), Int(static_cast<long long>(std::floor(v)))) << p << " " << q << " " << d;
      }
}
