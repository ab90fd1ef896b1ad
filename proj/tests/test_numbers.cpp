#include <gtest/gtest.h>

#include "lattrig/numbers.hpp"
#include "oracles.hpp"

using namespace lattrig;

TEST(FloorDiv, RoundsTowardMinusInfinity) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(floor_div(-7, -2), 3);
  EXPECT_EQ(floor_div(-6, 3), -2);
  EXPECT_THROW(floor_div(1, 0), std::domain_error);
}

TEST(FloorMod, AlwaysNonNegative) {
  oracle::Gen g(11);
  for (int i = 0; i < 500; ++i) {
    Int a = g.range(-1000, 1000), c = g.nonzero(50);
    Int r = floor_mod(a, c);
    EXPECT_GE(r, 0);
    EXPECT_LT(r, abs_int(c));
    EXPECT_EQ((a - r) % c, 0);
  }
}

TEST(ExtGcd, BezoutIdentity) {
  oracle::Gen g(12);
  for (int i = 0; i < 500; ++i) {
    Int a = g.range(-10000, 10000), b = g.range(-10000, 10000);
    auto [d, u, v] = ext_gcd(a, b);
    EXPECT_EQ(d, oracle::brute_gcd(a, b));
    EXPECT_EQ(a * u + b * v, d);
  }
}

TEST(GcdLcm, ListsAndZero) {
  auto [g, l] = gcd_lcm({4, 6, 10});
  EXPECT_EQ(g, 2);
  EXPECT_EQ(l, 60);
  auto [g1, l1] = gcd_lcm({-3, 5});
  EXPECT_EQ(g1, 1);
  EXPECT_EQ(l1, 15);
  EXPECT_THROW(gcd_lcm({0, 3}), std::domain_error);
  std::vector<Int> none;
  EXPECT_THROW(gcd_lcm(std::span<const Int>(none)), std::invalid_argument);
}

TEST(ModInverse, ExhaustiveUpToThousand) {
  for (long long c = 1; c <= 1000; ++c)
    for (long long b = 1; b <= 1000; ++b) {
      if (oracle::brute_gcd(b, c) != 1) {
        if (c > 1) {
          EXPECT_THROW(mod_inverse(b, c), std::domain_error);
        }
        continue;
      }
      Int a = mod_inverse(b, c);
      EXPECT_GE(a, 1);
      EXPECT_LE(a, c);
      EXPECT_EQ(floor_mod(a * b, c), c == 1 ? 0 : 1);
    }
}

TEST(ModInverse, NegativeArgumentAndBadModulus) {
  EXPECT_EQ(mod_inverse(-5, 7), 4);  // -5 * 4 = -20 = 1 mod 7
  EXPECT_EQ(mod_inverse(3, 1), 1);
  EXPECT_THROW(mod_inverse(2, 0), std::domain_error);
}

TEST(ExtRat, FiniteArithmeticMatchesRationals) {
  oracle::Gen g(13);
  for (int i = 0; i < 500; ++i) {
    Rat a(g.range(-50, 50), g.range(1, 20)), b(g.range(-50, 50), g.range(1, 20));
    EXPECT_EQ(ExtRat(a) + ExtRat(b), ExtRat(a + b));
    EXPECT_EQ(-ExtRat(a), ExtRat(-a));
    EXPECT_EQ(ExtRat(a) < ExtRat(b), a < b);
    if (a != 0) {
      EXPECT_EQ(ExtRat(a).recip(), ExtRat(1 / a));
    }
  }
}

TEST(ExtRat, InfinityRules) {
  ExtRat inf = ExtRat::infinity();
  EXPECT_TRUE(inf.is_inf());
  EXPECT_EQ(ExtRat(0).recip(), inf);
  EXPECT_EQ(inf.recip(), ExtRat(0));
  EXPECT_EQ(inf + ExtRat(5), inf);
  EXPECT_EQ(-inf, inf);
  EXPECT_THROW(inf + inf, std::domain_error);
  EXPECT_THROW(inf.value(), std::domain_error);
  EXPECT_TRUE(ExtRat(1000000) < inf);
  EXPECT_FALSE(inf < inf);
}

TEST(Serialization, RationalStrings) {
  EXPECT_EQ(to_string(Rat(7, 3)), "7/3");
  EXPECT_EQ(to_string(Rat(-4, 2)), "-2");
  EXPECT_EQ(to_string(ExtRat::infinity()), "inf");
  EXPECT_EQ(parse_rat(" 14/6 "), Rat(7, 3));
  EXPECT_EQ(parse_rat("-3"), Rat(-3));
  EXPECT_EQ(parse_extrat("inf"), ExtRat::infinity());
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_int("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_int(""), std::invalid_argument);
}

TEST(Serialization, RoundTrip) {
  oracle::Gen g(14);
  for (int i = 0; i < 300; ++i) {
    Rat q(g.range(-100000, 100000), g.range(1, 1000));
    EXPECT_EQ(parse_rat(to_string(q)), q);
  }
}

TEST(Serialization, Lists) {
  auto v = parse_int_list("2, 2,1,-1");
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(join(v), "2,2,1,-1");
  auto r = parse_rat_list("2;3/2;5");
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[1], Rat(3, 2));
  EXPECT_TRUE(parse_int_list("  ").empty());
}

TEST(BigIntegers, NoOverflow) {
  Int big = 1;
  for (int i = 0; i < 40; ++i) big *= 1000003;
  EXPECT_EQ(floor_div(big * 7 + 3, big), 7);
  EXPECT_EQ(mod_inverse(big + 1, big), 1);
}
