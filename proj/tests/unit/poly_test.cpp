#include <gtest/gtest.h>

#include <random>

#include "ffh/core/error.hpp"
#include "ffh/core/parser.hpp"

using namespace ffh;

namespace {

const std::vector<std::string> XY{"X", "Y"};

MPoly P(const std::string& s, FieldPtr K = Field::rationals()) { return parse_mpoly(s, K, XY); }

MPoly random_bivariate(std::mt19937_64& rng, const FieldPtr& K, int dx, int dy) {
  MPoly p(K, XY);
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= dy; ++j) {
      if (rng() % 3 == 0) continue;
      long c = static_cast<long>(rng() % 11) - 5;
      Value v = K->from_rational(c);
      if (K->has_t() && rng() % 2) v = K->from_ratfunc(RatFunc(QPoly({Rational(c), Rational(1)})));
      p.add_term({i, j}, v);
    }
  return p;
}

}  // namespace

TEST(MPoly, ProductOfLinearFactors) { EXPECT_EQ(P("Y - X") * P("Y + X"), P("Y^2 - X^2")); }

TEST(MPoly, ResultantExamples) {
  EXPECT_EQ(resultant(P("Y^2 - X"), P("Y - X"), 1), P("X^2 - X"));
  EXPECT_EQ(resultant(P("Y^2 - X"), P("2*Y"), 1), P("-4*X"));
  EXPECT_TRUE(resultant(P("Y - 1"), P("Y - 1"), 1).is_zero());
}

TEST(MPoly, DiscriminantExamples) {
  EXPECT_EQ(discriminant(P("Y^2 - X"), 1), P("4*X"));
  EXPECT_EQ(discriminant(P("Y - X"), 1), P("1"));
  EXPECT_TRUE(discriminant(P("Y^2"), 1).is_zero());
}

TEST(MPoly, ResultantVanishesExactlyOnCommonFactor) {
  std::mt19937_64 rng(5);
  const FieldPtr K = Field::rationals();
  for (int i = 0; i < 40; ++i) {
    MPoly a = random_bivariate(rng, K, 2, 2), b = random_bivariate(rng, K, 2, 2);
    if (a.degree(1) < 1 || b.degree(1) < 1) continue;
    if (i % 2) {
      MPoly c = random_bivariate(rng, K, 1, 1);
      if (c.degree(1) < 1) continue;
      a = a * c;
      b = b * c;
      EXPECT_TRUE(resultant(a, b, 1).is_zero());
    } else {
      // Compare against a univariate gcd over Q(X) at a specialization.
      MPoly r = resultant(a, b, 1);
      MPoly ra = a.eval(0, K->from_rational(7)), rb = b.eval(0, K->from_rational(7));
      UPoly ua = ra.to_upoly(1), ub = rb.to_upoly(1);
      if (ua.degree() == a.degree(1) && ub.degree() == b.degree(1))
        EXPECT_EQ(r.eval(0, K->from_rational(7)).is_zero(), gcd(ua, ub).degree() > 0);
    }
  }
}

TEST(MPoly, DivexactRecovers) {
  std::mt19937_64 rng(9);
  const FieldPtr K = Field::rational_functions();
  for (int i = 0; i < 20; ++i) {
    MPoly a = random_bivariate(rng, K, 2, 2), b = random_bivariate(rng, K, 2, 1);
    if (b.is_zero()) continue;
    EXPECT_EQ(divexact(a * b, b), a);
  }
}

TEST(Parser, RoundTrip) {
  std::mt19937_64 rng(13);
  const FieldPtr K = Field::rational_functions();
  for (int i = 0; i < 50; ++i) {
    MPoly a = random_bivariate(rng, K, 3, 3);
    a = a.scale(K->from_ratfunc(RatFunc(QPoly({Rational(1), Rational(-3, 2)}), QPoly({Rational(2), Rational(0), Rational(1)}))));
    EXPECT_EQ(parse_mpoly(a.to_string(), K, XY), a) << a.to_string();
  }
  RatFunc r = parse_ratfunc("(t^2+1)/t");
  EXPECT_EQ(parse_ratfunc(r.to_string()), r);
  EXPECT_EQ(r.degree(), 2);
}

TEST(Parser, SyntaxErrorOffset) {
  try {
    parse_expression("Y^2 -");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
  EXPECT_THROW(parse_mpoly("Y + w", Field::rationals(), XY), SyntaxError);
}

TEST(Field, GaussianArithmetic) {
  auto K = Field::adjoin(Field::rationals(), {Field::rationals()->one(), Value{}, Field::rationals()->one()}, "u1",
                         Irreducibility::Certified);
  Elem i(K, K->generator());
  EXPECT_EQ(i * i, Elem::rational(K, -1));
  Elem z = i + Elem::rational(K, 2);
  EXPECT_EQ(z * z.inverse(), Elem::rational(K, 1));
  EXPECT_EQ(parse_elem(z.to_string(), K), z);
}
