#include <gtest/gtest.h>

#include "ffh/core/error.hpp"
#include "ffh/heights/height.hpp"
#include "ffh/rr/riemann_roch.hpp"

using namespace ffh;

namespace {

Place place(const CurveModel& c, const std::string& center, int branch = 0) {
  return places_above(c, Center::parse(center, c.K)).at(branch);
}

Divisor single(const Place& p, long m) {
  Divisor D;
  D.add(p, m);
  return D;
}

MPoly XY(const CurveModel& c, const std::string& s) { return parse_mpoly(s, c.K, CurveModel::vars()); }

void expect_member(const DivisorContext& ctx, const RRElement& z) {
  EXPECT_TRUE(verify_membership(ctx.curve, ctx.D, z.z(), ctx.U).member);
  bool one = false;
  for (const auto& row : z.a)
    for (const auto& v : row) one = one || ctx.curve.K->is_one(v);
  EXPECT_TRUE(one);
  for (const auto& b : z.checks) EXPECT_NE(b.status, "violated") << b.name;
}

}  // namespace

TEST(DivisorContext, Examples) {
  auto c = CurveModel::parse("Y^2 - X");
  auto ctx = divisor_context(c, single(place(c, "1"), 1));
  EXPECT_EQ(ctx.delta, 1);
  EXPECT_EQ(ctx.exponent, 6);
  // (4X)^6 (X - 1)^6 made monic.
  ASSERT_EQ(ctx.qD.size(), 2u);
  EXPECT_EQ(ctx.qD_poly(), (UPoly::variable(c.K) * (UPoly::variable(c.K) - UPoly::constant(c.K, c.K->one()))).pow(6));
  auto ctx1 = divisor_context(c, single(place(c, "0"), 1));
  EXPECT_EQ(ctx1.delta, 1);
  EXPECT_EQ(ctx1.exponent, 6);
  // d(X) = 4X and the center X: q_D = X^6 X^6.
  ASSERT_EQ(ctx1.qD.size(), 1u);
  EXPECT_EQ(ctx1.qD[0].first.to_string("X"), "X");
  EXPECT_EQ(ctx1.qD[0].second, 12);
  EXPECT_EQ(ctx1.hD, 0);

  Divisor D = single(place(c, "0"), 3) + single(place(c, "inf"), -2);
  EXPECT_EQ(divisor_context(c, D).delta, 5);
  EXPECT_THROW(divisor_context(c, Divisor()), InputError);

  auto ct = CurveModel::parse("Y^2 - X - t");
  auto ctxt = divisor_context(ct, single(place(ct, "t"), 1));
  EXPECT_EQ(ctxt.hD, 1);
}

TEST(RiemannRoch, IdentityCurve) {
  auto c = CurveModel::parse("Y - X");
  auto ctx = divisor_context(c, single(place(c, "inf"), 2));
  auto z = rr_element(ctx);
  expect_member(ctx, z);
  EXPECT_TRUE(z.q.is_constant());
  EXPECT_LE(z.g.degree(0) + z.g.degree(1), 2);
}

TEST(RiemannRoch, NegativeDegree) {
  auto c = CurveModel::parse("Y^2 - X");
  auto ctx = divisor_context(c, single(place(c, "inf"), -1));
  EXPECT_THROW(rr_element(ctx), NoSolutionError);
  auto ct = CurveModel::parse("Y^2 - X^3 - 1");
  EXPECT_THROW(rr_element(divisor_context(ct, single(place(ct, "0"), -1))), NoSolutionError);
}

TEST(RiemannRoch, ZeroPlaceOfParabola) {
  auto c = CurveModel::parse("Y^2 - X");
  auto p0 = place(c, "0");
  auto ctx = divisor_context(c, single(p0, 1));
  Fraction yx{XY(c, "Y"), XY(c, "X")};
  auto cert = verify_membership(c, ctx.D, yx);
  EXPECT_TRUE(cert.member);
  auto z = rr_element(ctx);
  expect_member(ctx, z);
  EXPECT_LT(z.q.degree(), ctx.exponent);
}

TEST(RiemannRoch, MoreInstances) {
  const std::vector<std::pair<std::string, std::vector<std::pair<std::string, long>>>> cases = {
      {"Y^2 - X^3 - 1", {{"inf", 3}}},
      {"Y^2 - X^3 - 1", {{"inf", 4}, {"-1", -1}}},
      {"Y^2 - X", {{"inf", 6}, {"-1", -2}}},
      {"Y^2 - X - t", {{"inf", 2}}},
      {"Y^2 - X - t", {{"t", 1}, {"inf", 1}}},
      {"Y^2 - X - t", {{"inf", 3}, {"t^2 - t!", -2}}},
      {"Y^2 - X^3", {{"inf", 1}, {"1!", -1}}},
      {"X*Y^2 - 1", {{"inf", 1}, {"1!", -1}}},
  };
  for (const auto& [poly, parts] : cases) {
    auto c = CurveModel::parse(poly);
    Divisor D;
    for (auto [center, m] : parts) {
      // A trailing '!' selects the first branch only.
      const bool first = center.back() == '!';
      if (first) center.pop_back();
      auto ps = places_above(c, Center::parse(center, c.K));
      if (first) ps.resize(1);
      for (const auto& p : ps) D.add(p, m);
    }
    auto ctx = divisor_context(c, D);
    auto z = rr_element(ctx);
    SCOPED_TRACE(poly + " " + D.to_string());
    expect_member(ctx, z);
    if (!c.K->has_t()) EXPECT_EQ(z.height_a, 0);
    // Extra series terms do not change the rank.
    RROptions ro;
    ro.extra_terms = 5;
    EXPECT_EQ(rr_element(ctx, ro).rank, z.rank);
  }
}

TEST(RiemannRoch, CuspNeedsDenominator) {
  // Nothing in K[x, y] has a single simple pole; (x - y)/x does.
  auto c = CurveModel::parse("Y^2 - X^3");
  Divisor D = single(place(c, "inf"), 1) + single(place(c, "1"), -1);
  auto ctx = divisor_context(c, D);
  auto z = rr_element(ctx);
  expect_member(ctx, z);
  EXPECT_EQ(z.q.to_string("X"), "X");
}

TEST(RiemannRoch, Fallback) {
  auto c = CurveModel::parse("Y^2 - X");
  auto ctx = divisor_context(c, single(place(c, "0"), 1));
  RROptions ro;
  ro.mode = RRMode::Fallback;
  auto z = rr_element(ctx, ro);
  EXPECT_TRUE(verify_membership(c, ctx.D, z.z(), ctx.U).member);
  EXPECT_EQ(z.q.degree(), ctx.qD_degree());
  for (const auto& b : z.checks)
    if (b.name != "cramer-height") EXPECT_EQ(b.status, "not-applicable");
}

TEST(Membership, Examples) {
  auto c = CurveModel::parse("Y^2 - X");
  auto p1 = place(c, "1");
  Divisor D = single(p1, 1);
  EXPECT_TRUE(verify_membership(c, D, Fraction{XY(c, "1"), XY(c, "1")}).member);
  auto cert = verify_membership(c, D, Fraction{XY(c, "1"), XY(c, "X")});
  EXPECT_FALSE(cert.member);
  bool found = false;
  for (const auto& e : cert.entries)
    if (!e.ok) found = found || e.key.rfind("0#", 0) == 0;
  EXPECT_TRUE(found);
}

TEST(MinimalPolynomial, Examples) {
  auto c = CurveModel::parse("Y^2 - X");
  Fraction yx{XY(c, "Y"), XY(c, "X")};
  auto q1 = minimal_polynomial(c, yx, Against::X);
  EXPECT_EQ(q1.Q.to_string(), "X*Z^2 - 1");
  EXPECT_TRUE(q1.annihilates);
  EXPECT_TRUE(q1.divides_resultant);
  auto q2 = minimal_polynomial(c, yx, Against::Y);
  EXPECT_EQ(q2.Q.to_string(), "Y*Z - 1");
  EXPECT_TRUE(q2.divides_resultant);
  auto q3 = minimal_polynomial(c, Fraction{XY(c, "5"), XY(c, "1")}, Against::X);
  EXPECT_EQ(q3.Q.to_string(), "Z - 5");
}

TEST(MinimalPolynomial, ConstructedElements) {
  for (const std::string poly : {"Y^2 - X^3 - 1", "Y^2 - X - t"}) {
    auto c = CurveModel::parse(poly);
    Divisor D;
    for (const auto& p : places_above(c, Center::at_infinity())) D.add(p, 3);
    auto ctx = divisor_context(c, D);
    auto z = rr_element(ctx);
    for (Against a : {Against::X, Against::Y}) {
      auto r = minimal_polynomial(c, z.z(), a);
      EXPECT_TRUE(r.annihilates);
      EXPECT_TRUE(r.divides_resultant);
      EXPECT_EQ(minimal_polynomial_bound(ctx, r).status, "satisfied");
    }
  }
}
