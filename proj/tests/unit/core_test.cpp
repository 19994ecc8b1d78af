#include <gtest/gtest.h>

#include <random>

#include "ffh/core/factor.hpp"
#include "ffh/core/ratfunc.hpp"

using namespace ffh;

namespace {

QPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}

QPoly random_poly(std::mt19937_64& rng, int deg, int range = 9) {
  std::vector<Rational> v;
  for (int i = 0; i <= deg; ++i) v.emplace_back(static_cast<long>(rng() % (2 * range + 1)) - range);
  if (v.back() == 0) v.back() = 1;
  return QPoly(v);
}

}  // namespace

TEST(QPoly, GcdOfDifferenceOfSquares) {
  EXPECT_EQ(gcd(poly({-1, 0, 1}), poly({-1, 1})), poly({-1, 1}));
}

TEST(QPoly, SquarefreePart) {
  QPoly f = poly({-1, 1}).pow(2) * poly({2, 1});
  EXPECT_EQ(squarefree_part(f), poly({-1, 1}) * poly({2, 1}));
}

TEST(QPoly, DivremRecombines) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    QPoly a = random_poly(rng, rng() % 8), b = random_poly(rng, rng() % 5);
    auto [q, r] = divrem(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(QPoly, XgcdBezout) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    QPoly a = random_poly(rng, 1 + rng() % 6), b = random_poly(rng, 1 + rng() % 6);
    QPoly s, t;
    QPoly g = xgcd(a, b, s, t);
    EXPECT_EQ(s * a + t * b, g);
    EXPECT_EQ(g, gcd(a, b));
  }
}

TEST(RatFunc, Normalizes) {
  RatFunc r(poly({-1, 0, 1}), poly({-2, 2}));
  EXPECT_EQ(r.num(), poly({1, 1}) * Rational(1, 2));
  EXPECT_EQ(r.den(), QPoly(1));
  RatFunc s = RatFunc(poly({1, 0, 1})) / RatFunc::t();
  EXPECT_EQ(s.degree(), 2);
  EXPECT_EQ(s - s, RatFunc());
}

TEST(Factor, SpecExamples) {
  auto f = factor_univariate_Q(poly({-1, 0, 1}));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first, poly({-1, 1}));
  EXPECT_EQ(f.factors[1].first, poly({1, 1}));
  auto g = factor_univariate_Q(poly({1, 0, 1}));
  ASSERT_EQ(g.factors.size(), 1u);
  auto h = factor_univariate_Q(poly({0, 0, -1, 0, 1}));
  ASSERT_EQ(h.factors.size(), 3u);
  EXPECT_EQ(h.factors[0], std::make_pair(poly({0, 1}), 2));
}

TEST(Factor, SwinnertonDyerStyle) {
  // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime.
  auto f = factor_univariate_Q(poly({1, 0, -10, 0, 1}));
  ASSERT_EQ(f.factors.size(), 1u);
}

TEST(Factor, RandomProductsRemultiply) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    QPoly p = random_poly(rng, 1 + rng() % 4) * random_poly(rng, 1 + rng() % 4) * random_poly(rng, rng() % 3);
    auto f = factor_univariate_Q(p);
    QPoly prod(f.unit);
    for (const auto& [g, m] : f.factors) {
      EXPECT_EQ(g.lead(), 1);
      prod *= g.pow(m);
      if (g.degree() <= 5) {
        // no divisor of degree 1 or 2 among small-coefficient candidates
        for (const auto& [h, mh] : factor_univariate_Q(g).factors) EXPECT_EQ(h, g);
      }
    }
    EXPECT_EQ(prod, p);
  }
}
