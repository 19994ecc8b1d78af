#include <gtest/gtest.h>

#include "ffh/core/error.hpp"
#include "ffh/core/sampler.hpp"
#include "ffh/quasi/quasi.hpp"

using namespace ffh;

TEST(Lambda, Examples) {
  auto l = lambda_params(2, Rational(1, 2));
  EXPECT_EQ(l.l1, 3);
  EXPECT_EQ(l.l2, 2);
  l = lambda_params(3, Rational(1, 3));
  EXPECT_EQ(l.l1, 6);
  EXPECT_EQ(l.l2, 5);
  EXPECT_THROW(lambda_params(2, 1), InputError);
  EXPECT_THROW(lambda_params(2, 0), InputError);
}

TEST(Lambda, Inequalities) {
  for (long rho = 1; rho <= 12; ++rho)
    for (Rational eps : {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 10)}) {
      auto l = lambda_params(rho, eps);
      EXPECT_GE(Rational(l.l1 - l.l2), Rational(rho, 2) - 1);
      EXPECT_LE(Rational(l.l1, l.l2), 1 + eps);
      EXPECT_LE(Rational(l.l1 + l.l2), 2 * Rational(rho + 1) / eps);
      // lambda2 is the least integer >= rho / (2 eps).
      EXPECT_GE(Rational(l.l2), Rational(rho) / (2 * eps));
      EXPECT_LT(Rational(l.l2 - 1), Rational(rho) / (2 * eps));
    }
}

TEST(Mobius, Examples) {
  auto c = CurveModel::parse("Y^2 - X");
  auto mb = choose_mobius(c);
  EXPECT_EQ(mb.c1, 1);
  EXPECT_EQ(mb.c2, 1);
  EXPECT_TRUE(poles_disjoint(c, mb));
  EXPECT_FALSE(poles_disjoint(c, Mobius{0, 1}));
  // y has its poles above x = 0 only.
  auto c2 = CurveModel::parse("X*Y - 1");
  mb = choose_mobius(c2);
  EXPECT_EQ(mb.c1, 0);
  EXPECT_EQ(mb.c2, 1);
  for (const std::string p : {"Y - X", "Y^2 - X^3 - 1", "X*Y^2 - X - 1", "Y^2 - X - t"})
    EXPECT_TRUE(poles_disjoint(CurveModel::parse(p), choose_mobius(CurveModel::parse(p)))) << p;
}

TEST(ConstantC, Examples) {
  auto C = constant_C(2, Rational(1, 2), 1);
  EXPECT_EQ(C.coeff, 39321600);
  EXPECT_EQ(C.base, 3);
  EXPECT_EQ(C.exponent, 6298560);
  C = constant_C(1, Rational(1, 2), 1);
  EXPECT_EQ(C.coeff, 39321600);
  EXPECT_EQ(C.base, 2);
  EXPECT_EQ(C.exponent, 163840);
  EXPECT_TRUE(constant_C(2, Rational(1, 2), 0).is_zero());
  EXPECT_THROW(constant_C(2, Rational(3, 2), 1), InputError);
  // Non-integral exponent stays exact.
  EXPECT_EQ(constant_C(1, Rational(2, 3), 1).exponent, 69120);
}

TEST(TheoremDivisor, Examples) {
  auto c = CurveModel::parse("Y^2 - X");
  auto tp = theorem_divisor(c, Rational(1, 2));
  EXPECT_EQ(tp.lambda.l1, 3);
  EXPECT_EQ(tp.lambda.l2, 2);
  EXPECT_EQ(tp.degree, 2);
  EXPECT_TRUE(tp.degree_ok);
  EXPECT_TRUE(tp.place_heights_ok);
  EXPECT_EQ(tp.ypoles.degree(), 1);
  EXPECT_EQ(tp.xbar_poles.degree(), 2);
  auto id = theorem_divisor(CurveModel::parse("Y - X"), Rational(1, 3));
  EXPECT_EQ(id.degree, id.lambda.l1 - id.lambda.l2);
  auto ct = theorem_divisor(CurveModel::parse("Y^2 - X - t"), Rational(1, 2));
  EXPECT_TRUE(ct.place_heights_ok);
  EXPECT_EQ(ct.hP, 1);
}

TEST(PlaceInequality, Examples) {
  auto QT = Field::rational_functions();
  auto Q = parse_mpoly("X - Z", QT, {"X", "Z"});
  Elem a(QT, QT->from_ratfunc(parse_ratfunc("t^2 + 1")));
  auto r = per_place_inequality(Q, a, a, 1, 1);
  EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(r.lhs, r.rhs);
  auto inf = per_place_inequality(Q, std::nullopt, a, 1, 1);
  EXPECT_EQ(inf.lhs, 0);
  EXPECT_TRUE(inf.satisfied);
  Elem b(QT, QT->from_ratfunc(parse_ratfunc("t")));
  EXPECT_THROW(per_place_inequality(Q, a, b, 1, 1), InputError);
}

TEST(QuasiCheck, ConstantCurvesAreExact) {
  Sampler s(7);
  std::vector<RatFunc> as;
  for (int i = 0; i < 12; ++i) as.push_back(s.ratfunc(6, 5));
  for (const std::string p : {"Y - X", "Y^2 - X^3 - 1", "Y^2 - X^5 - 1"}) {
    auto c = CurveModel::parse(p);
    auto rep = quasi_check(c, as, Rational(1, 2), Tier::Heights);
    EXPECT_TRUE(rep.passed()) << p;
    EXPECT_GE(rep.samples.size(), 10u) << p;
    for (const auto& x : rep.samples) EXPECT_EQ(x.m_ha, x.n_hb) << p << " a=" << x.a;
  }
}

TEST(QuasiCheck, Examples) {
  auto c = CurveModel::parse("Y^2 - X^3 - 1");
  auto rep = quasi_check(c, {RatFunc::t()}, Rational(1, 3), Tier::Heights);
  ASSERT_EQ(rep.samples.size(), 1u);
  EXPECT_EQ(rep.samples[0].ha, 1);
  EXPECT_EQ(rep.samples[0].hb, Rational(3, 2));
  auto ct = CurveModel::parse("Y^2 - X - t");
  rep = quasi_check(ct, {RatFunc::t().pow(2)}, Rational(1, 2), Tier::Heights);
  ASSERT_EQ(rep.samples.size(), 1u);
  EXPECT_EQ(rep.samples[0].hb, 1);
  EXPECT_EQ(rep.samples[0].m_ha, 2);
  EXPECT_TRUE(rep.passed());
  // Reducible fibre: two records.
  rep = quasi_check(CurveModel::parse("Y^2 - X"), {RatFunc::t().pow(2)}, Rational(1, 2), Tier::Heights);
  EXPECT_EQ(rep.samples.size(), 2u);
}

TEST(QuasiCheck, FullTier) {
  Sampler s(11);
  std::vector<RatFunc> as;
  for (int i = 0; i < 4; ++i) as.push_back(s.ratfunc(3, 4));
  auto c = CurveModel::parse("Y^2 - X - t");
  auto rep = quasi_check(c, as, Rational(1, 2), Tier::Full);
  ASSERT_EQ(rep.sides.size(), 2u);
  for (const auto& sd : rep.sides) {
    EXPECT_TRUE(sd.hypotheses_ok) << sd.side;
    EXPECT_TRUE(sd.Q1.annihilates);
    EXPECT_TRUE(sd.Q2.divides_resultant);
  }
  for (const auto& x : rep.samples) EXPECT_FALSE(x.chain.empty());
  EXPECT_TRUE(rep.passed());
}
