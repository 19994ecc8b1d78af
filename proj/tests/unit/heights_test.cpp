#include <gtest/gtest.h>

#include "ffh/core/error.hpp"
#include "ffh/core/sampler.hpp"
#include "ffh/heights/audit.hpp"
#include "ffh/heights/laws.hpp"
#include "ffh/heights/log_constant.hpp"

using namespace ffh;

namespace {

const FieldPtr Q = Field::rationals();
const FieldPtr QT = Field::rational_functions();

UPoly U(const std::string& s, const FieldPtr& K) { return parse_mpoly(s, K, {"Y"}).to_upoly(0); }
Elem E(const std::string& s, const FieldPtr& K) { return parse_elem(s, K); }
MPoly P(const std::string& s, const FieldPtr& K) { return parse_mpoly(s, K, {"X", "Y"}); }
Elem R(const RatFunc& r) { return Elem(QT, QT->from_ratfunc(r)); }

FieldPtr sqrt_field(const std::string& m) { return extend_field(QT, U(m, QT)); }

}  // namespace

TEST(Heights, PointExamples) {
  EXPECT_EQ(height_point(std::vector<RatFunc>{1, RatFunc::t()}), 1);
  EXPECT_EQ(height_point(std::vector<RatFunc>{1, RatFunc::t(), RatFunc::t().pow(2)}), 2);
  EXPECT_EQ(height_point(std::vector<RatFunc>{1, Rational(5, 7)}), 0);
  EXPECT_THROW(height_point(std::vector<RatFunc>{0, 0}), InputError);
  // (t : t^2) = (1 : t), common zeros cancel.
  EXPECT_EQ(height_point(std::vector<RatFunc>{RatFunc::t(), RatFunc::t().pow(2)}), 1);
}

TEST(Heights, ElementExamples) {
  EXPECT_EQ(height_element(parse_ratfunc("(t^2+1)/t")), 2);
  EXPECT_EQ(height_element(RatFunc::t()), 1);
  auto L = sqrt_field("Y^2 - t^3 - 1");
  Elem u(L, L->generator());
  EXPECT_EQ(height_element(u), Rational(3, 2));
  EXPECT_EQ(height_element_by_places(u), Rational(3, 2));
  EXPECT_EQ(height_element(Elem::rational(Q, 7)), 0);
}

TEST(Heights, PlacesMatchDegreeRatioInTowers) {
  Sampler s(11);
  for (const char* m : {"Y^2 - t^3 - 1", "Y^2 - t", "Y^3 - t^2 - t", "Y^2 - 2"}) {
    auto L = sqrt_field(m);
    for (int i = 0; i < 4; ++i) {
      std::vector<RatFunc> c(L->total_degree());
      for (auto& x : c) x = s.ratfunc(2, 3);
      Elem e(L, L->from_coordinates(c));
      if (e.is_zero()) continue;
      EXPECT_EQ(height_element_by_places(e), height_element(e)) << m << " " << e.to_string();
    }
  }
}

TEST(Heights, DeeperTowerUsesPrimitiveElement) {
  auto L = sqrt_field("Y^2 - t");
  auto M = extend_field(L, U("Y^2 - t - 1", L));
  Elem e = E("u1 + u2", M);
  EXPECT_EQ(height_element_by_places(e), height_element(e));
  EXPECT_EQ(height_point({Elem::rational(M, 1), E("u1", M)}), Rational(1, 2));
}

TEST(Heights, PolynomialExamples) {
  EXPECT_EQ(height_polynomial(P("Y^2 - X^3 - t", QT)), 1);
  EXPECT_EQ(height_polynomial(P("3*X^2*Y", QT)), 0);
  EXPECT_EQ(height_polynomial(P("Y^2 - X^3 - 1", Q)), 0);
  EXPECT_THROW(height_polynomial(MPoly(QT, {"X", "Y"})), InputError);
}

TEST(Heights, DefinitionMatchesDegree) {
  Sampler s(2024);
  for (int i = 0; i < 200; ++i) {
    RatFunc a = s.ratfunc(10, 9);
    EXPECT_EQ(height_point(std::vector<RatFunc>{1, a}), a.degree());
  }
}

TEST(Heights, ScalingInvariance) {
  Sampler s(7);
  for (int i = 0; i < 30; ++i) {
    std::vector<RatFunc> pt = {s.ratfunc(4, 5), s.ratfunc(4, 5), s.ratfunc(4, 5)};
    RatFunc lambda = s.ratfunc(5, 5);
    std::vector<RatFunc> scaled;
    for (const auto& x : pt) scaled.push_back(x * lambda);
    EXPECT_EQ(height_point(pt), height_point(scaled));
  }
}

TEST(HeightLaws, Examples) {
  auto r = law_power(R(RatFunc::t()), 3);
  EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(r.lhs, 3);
  EXPECT_EQ(r.rhs, 3);
  r = law_veronese({R(1), R(RatFunc::t())}, 2);
  EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(r.lhs, 2);
  r = law_mobius(R(RatFunc::t()), {1, 1, 0, 1});
  EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(r.lhs, 1);
  EXPECT_THROW(law_mobius(R(RatFunc::t()), {1, 1, 1, 1}), InputError);
}

TEST(HeightLaws, RandomInstances) {
  Sampler s(99);
  const std::vector<std::string> xy = {"X", "Y"};
  auto rpoly = [&](int dx, int dy) {
    MPoly p(QT, xy);
    for (int i = 0; i <= dx; ++i)
      for (int j = 0; j <= dy; ++j)
        if (s.integer(0, 2)) p.add_term({i, j}, QT->from_ratfunc(RatFunc(s.qpoly(static_cast<int>(s.integer(0, 2)), 4))));
    if (p.is_zero()) p.add_term({0, 0}, QT->one());
    return p;
  };
  for (int i = 0; i < 20; ++i) {
    Elem a = R(s.ratfunc(3, 4)), b = R(s.ratfunc(3, 4));
    EXPECT_TRUE(law_sum(a, b).satisfied);
    EXPECT_TRUE(law_product(a, b).satisfied);
    if (!a.is_zero()) EXPECT_TRUE(law_power(a, s.integer(0, 4)).satisfied);
    MPoly g = rpoly(2, 1), h = rpoly(1, 2);
    EXPECT_TRUE(law_polynomial_product(g, h).satisfied);
    EXPECT_TRUE(law_divisibility(g, h).satisfied);
    EXPECT_TRUE(law_resultant(g, h).satisfied);
    EXPECT_TRUE(law_shift(g, a, b).satisfied);
    EXPECT_TRUE(law_coordinate_sum({R(1), a, b}).satisfied);
    EXPECT_TRUE(law_concatenation({R(1), a}, {R(1), b}).satisfied);
    EXPECT_TRUE(law_veronese({R(1), a, b}, 2).satisfied);
    if (!a.is_zero()) EXPECT_TRUE(law_mobius(a, {2, -1, 1, 3}).satisfied);
  }
}

TEST(HeightLaws, MorphismAndPolynomialValue) {
  // Phi = (X0*X2 : X1*X3) on P^1 x P^1.
  std::vector<std::string> v = {"X0", "X1", "X2", "X3"};
  std::vector<MPoly> phi = {parse_mpoly("X0*X2", QT, v), parse_mpoly("t*X1*X3 + X0*X3", QT, v)};
  auto r = law_morphism({{R(1), R(RatFunc::t())}, {R(1), R(parse_ratfunc("1/(t+1)"))}}, phi);
  EXPECT_TRUE(r.satisfied);
  EXPECT_THROW(law_morphism({{R(1), R(1)}, {R(1), R(1)}}, {parse_mpoly("X0*X2 + X1", QT, v)}), InputError);
  std::vector<std::string> w = {"X1", "X2"};
  auto q = parse_mpoly("X1^2*X2 - 3*X2 + 1", Q, w);
  r = law_polynomial_value(q, {R(RatFunc::t()), R(parse_ratfunc("t^2/(t-1)"))});
  EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(r.rhs, 4);
}

TEST(HeightLaws, RootLaw) {
  auto L = sqrt_field("Y^2 - t^3 - 1");
  auto H = U("Y^2 - t^3 - 1", QT);
  auto r = law_root(H, Elem(L, L->generator()));
  EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(r.lhs, Rational(3, 2));
  EXPECT_EQ(r.rhs, 3);
  EXPECT_THROW(law_root(H, Elem::rational(L, 2)), InputError);
}

TEST(SpecialCurve, Examples) {
  auto L = sqrt_field("Y^2 - t^2 - t");
  Elem alpha(L, L->from_ratfunc(RatFunc::t())), beta(L, L->generator());
  auto rs = special_curve_check(P("Y^2 - X^2 - X", Q), alpha, beta);
  for (const auto& r : rs) EXPECT_TRUE(r.satisfied) << r.law;
  ASSERT_EQ(rs.size(), 3u);
  EXPECT_EQ(rs[1].lhs, 2);
  EXPECT_EQ(rs[2].rhs, 2);

  Elem t = R(RatFunc::t());
  rs = special_curve_check(P("Y - X", Q), t, t);
  EXPECT_TRUE(rs[0].satisfied);
  EXPECT_EQ(rs[0].lhs, 1);

  // Weights of Y^2 - X^3 - 1 with m = 3, n = 2: 3j + 2i <= 6 on every term.
  auto M = sqrt_field("Y^2 - t^3 - 1");
  Elem a(M, M->from_ratfunc(RatFunc::t())), b(M, M->generator());
  rs = special_curve_check(P("Y^2 - X^3 - 1", Q), a, b);
  ASSERT_EQ(rs.size(), 2u);
  for (const auto& r : rs) EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(rs[0].lhs, 3);

  // m = 4, n = 3: the term X^4*Y has weight 4 + 12 > 12 and tdeg 5 > 3.
  EXPECT_THROW(special_curve_check(P("(1 + X*Y)*(Y^2 - X^3 - 1)", Q), a, b), InputError);
  EXPECT_THROW(special_curve_check(P("Y - X", Q), a, b), InputError);
}

TEST(Audits, SeriesSolve) {
  auto sa = series_solve_audit(parse_mpoly("Y^2 - (1 + z)", Q, {"z", "Y"}), 4);
  EXPECT_TRUE(sa.passed());
  EXPECT_EQ(sa.entries.size(), 4u);
  auto sb = series_solve_audit(parse_mpoly("Y - (1 + t*z)", QT, {"z", "Y"}), 3);
  EXPECT_EQ(sb.entries[1].value.to_string(), "t");
  EXPECT_EQ(sb.entries[1].height, 1);
  EXPECT_EQ(sb.entries[1].bound, 2);
  EXPECT_TRUE(sb.passed());
  auto sc = series_solve_audit(parse_mpoly("Y - 1", Q, {"z", "Y"}), 3);
  EXPECT_EQ(sc.entries[0].value.to_string(), "1");
  EXPECT_EQ(sc.entries[1].value.to_string(), "0");
  EXPECT_THROW(series_solve_audit(parse_mpoly("Y^2 - z", Q, {"z", "Y"}), 3), InputError);
}

TEST(Audits, BinomialSeries) {
  auto sa = series_solve_audit(parse_mpoly("Y^2 - (1 + z)", Q, {"z", "Y"}), 4);
  Rational sign = sa.entries[0].value.to_string() == "1" ? 1 : -1;
  std::vector<Rational> want = {1, Rational(1, 2), Rational(-1, 8), Rational(1, 16)};
  for (int i = 0; i < 4; ++i) {
    Rational r;
    ASSERT_TRUE(Q->is_rational(sa.entries[i].value.value(), &r));
    EXPECT_EQ(r, sign * want[i]);
  }
}

TEST(Audits, PlacesAndMonomials) {
  for (const char* text : {"Y^2 - X - t", "Y^2 - X^3 - 1", "Y^3 - X*Y + X^4"}) {
    auto c = CurveModel::parse(text);
    for (const char* center : {"0", "1", "inf"}) {
      for (const auto& p : places_above(c, Center::parse(center, c.K))) {
        auto pa = place_coefficient_audit(c, p, 8);
        EXPECT_TRUE(pa.passed()) << text << " @ " << center;
        for (long l = 0; l <= 3; ++l)
          for (long j = 0; j < c.n; ++j) EXPECT_TRUE(monomial_audit(c, p, l, j, 4).passed()) << text << " " << l << " " << j;
      }
    }
  }
  auto c = CurveModel::parse("Y^2 - X");
  auto p0 = places_above(c, Center::parse("0", c.K))[0];
  auto m = monomial_audit(c, p0, 1, 1, 2);
  EXPECT_EQ(m.leading, 3);
  auto pinf = places_above(c, Center::at_infinity())[0];
  m = monomial_audit(c, pinf, 1, 0, 2);
  EXPECT_EQ(m.leading, -2);
  EXPECT_GT(m.leading, -1 * 2 - 4);
  m = monomial_audit(c, p0, 0, 0, 2);
  EXPECT_EQ(m.leading, 0);
  EXPECT_EQ(m.entries[0].value.to_string(), "1");
}

TEST(LogConstant, Comparisons) {
  LogConstant c{Rational(39321600), 3, Rational(6298560), Rational(1)};
  EXPECT_TRUE(leq(Rational(Integer("1000000000000000000000000000000")), c));
  LogConstant zero{Rational(5), 3, Rational(10), Rational(0)};
  EXPECT_EQ(compare(Rational(0), zero), 0);
  EXPECT_EQ(compare(Rational(1), zero), 1);
  LogConstant small{Rational(2), 3, Rational(2), Rational(1, 2)};  // 9
  EXPECT_EQ(compare(Rational(9), small), 0);
  EXPECT_EQ(compare(Rational(10), small), 1);
  EXPECT_EQ(compare(Rational(17, 2), small), -1);
  LogConstant frac{Rational(1), 4, Rational(1, 2), Rational(1)};  // 2
  EXPECT_EQ(compare(Rational(2), frac), 0);
  EXPECT_EQ(compare(Rational(3), frac), 1);
  LogConstant neg{Rational(8), 2, Rational(-3), Rational(1)};  // 1
  EXPECT_EQ(compare(Rational(1), neg), 0);
  EXPECT_EQ(compare(Rational(2), neg), 1);
}
