#include "ffh/quasi/quasi.hpp"

#include <future>
#include <map>
#include <set>

#include "ffh/field/tower.hpp"
#include "ffh/heights/height.hpp"

namespace ffh {

namespace {

Integer ceil_div(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer floor_div(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

void check_eps(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw InputError("epsilon must lie strictly between 0 and 1");
}

const FieldPtr& QT() {
  static const FieldPtr f = Field::rational_functions();
  return f;
}

// The curve polynomial over Q(t).
MPoly over_qt(const MPoly& p) {
  if (p.field()->has_t()) return p;
  MPoly r(QT(), p.vars());
  for (const auto& [e, v] : p.terms()) r.add_term(e, QT()->from_ratfunc(v.base));
  return r;
}

Fraction y_over_one(const CurveModel& c) {
  return Fraction{MPoly::variable(c.K, CurveModel::vars(), "Y"), MPoly::constant(c.K, CurveModel::vars(), c.K->one())};
}

Fraction xbar(const CurveModel& c, const Mobius& mb) {
  const auto& v = CurveModel::vars();
  MPoly X = MPoly::variable(c.K, v, "X");
  MPoly den = X.scale(c.K->from_rational(mb.c1)) + MPoly::constant(c.K, v, c.K->from_rational(mb.c2));
  return Fraction{X, den};
}

std::set<std::string> keys(const Divisor& D) {
  std::set<std::string> s;
  for (const auto& [k, e] : D.entries()) s.insert(k);
  return s;
}

Elem lift_elem(const Elem& e, const FieldPtr& L) {
  if (e.field().get() == L.get()) return e;
  return Elem(L, L->lift(e.value(), e.field()->depth()));
}

ConstantCheck constant_check(std::string name, const Rational& lhs, const LogConstant& bound) {
  return ConstantCheck{std::move(name), lhs, bound.to_string(), leq(lhs, bound)};
}

LogConstant times(LogConstant c, const Rational& k) {
  c.coeff *= k;
  return c;
}

}  // namespace

Lambda lambda_params(long rho, const Rational& eps) {
  check_eps(eps);
  if (rho < 1) throw InputError("rho must be positive");
  Lambda l;
  l.l2 = ceil_div(Rational(rho) / (2 * eps)).get_si();
  l.l1 = floor_div(Rational(l.l2) + Rational(rho, 2)).get_si();
  const bool ok = Rational(l.l1 - l.l2) >= Rational(rho, 2) - 1 && Rational(l.l1, l.l2) <= 1 + eps &&
                  Rational(l.l1 + l.l2) <= 2 * Rational(rho + 1) / eps;
  if (!ok) throw Error("lambda parameters violate their defining inequalities");
  return l;
}

bool poles_disjoint(const CurveModel& c, const Mobius& mb, const PlaceOptions& opt) {
  if (mb.c2 == 0) return false;
  auto ys = keys(principal_divisor(c, y_over_one(c), opt).negative());
  for (const auto& k : keys(principal_divisor(c, xbar(c, mb), opt).negative()))
    if (ys.count(k)) return false;
  return true;
}

Mobius choose_mobius(const CurveModel& c, const PlaceOptions& opt) {
  Divisor S = principal_divisor(c, y_over_one(c), opt).negative();
  bool x_pole_in_S = false;
  std::vector<UPoly> finite;
  for (const auto& [k, e] : S.entries()) {
    if (e.place.at_infinity()) x_pole_in_S = true;
    else finite.push_back(e.place.center().poly);
  }
  if (!x_pole_in_S) {
    Mobius mb{0, 1};
    if (poles_disjoint(c, mb, opt)) return mb;
  }
  for (long c2 = 1; c2 <= 64; ++c2) {
    Mobius mb{1, c2};
    bool ok = true;
    for (const auto& f : finite) ok = ok && !c.K->is_zero(f.eval(c.K->from_rational(-c2)));
    if (ok && poles_disjoint(c, mb, opt)) return mb;
  }
  throw UnsupportedError("no Moebius shift found with c1 = 1, c2 in 1..64");
}

LogConstant constant_C(long rho, const Rational& eps, const Rational& hP) {
  check_eps(eps);
  LogConstant C;
  const Rational inv = 1 / eps;
  Rational inv6 = inv * inv * inv;
  inv6 *= inv6;
  C.coeff = Rational(75 * 8192) * inv6;
  C.base = rho + 1;
  Rational r1 = rho + 1;
  Rational p9 = 1;
  for (int i = 0; i < 9; ++i) p9 *= r1;
  C.exponent = 40 * p9 * inv * inv * inv;
  C.scale = hP;
  return C;
}

bool divisor_leq(const Divisor& A, const Divisor& B) {
  for (const auto& [k, e] : A.entries())
    if (e.mult > B.mult(k)) return false;
  for (const auto& [k, e] : B.entries())
    if (A.mult(k) > e.mult) return false;
  return true;
}

TheoremParameters theorem_divisor(const CurveModel& c, const Rational& eps, const PlaceOptions& opt) {
  TheoremParameters tp;
  tp.eps = eps;
  tp.rho = c.rho;
  tp.m = c.m;
  tp.n = c.n;
  tp.lambda = lambda_params(c.rho, eps);
  tp.mobius = choose_mobius(c, opt);
  tp.ypoles = principal_divisor(c, y_over_one(c), opt).negative();
  tp.xbar_poles = principal_divisor(c, xbar(c, tp.mobius), opt).negative();
  if (tp.ypoles.degree() != c.m || tp.xbar_poles.degree() != c.n)
    throw Error("pole divisor degrees disagree with the degrees of P");
  const long l1 = tp.lambda.l1, l2 = tp.lambda.l2;
  tp.D = tp.ypoles.scaled(l1 * c.n) - tp.xbar_poles.scaled(l2 * c.m);
  tp.D_lower = tp.xbar_poles.scaled(l2 * c.m) - tp.ypoles.scaled((2 * l2 - l1) * c.n);
  tp.degree = tp.D.degree();
  tp.degree_ok = tp.degree == (l1 - l2) * c.n * c.m && tp.D_lower.degree() == tp.degree &&
                 2 * tp.degree >= static_cast<long>(c.rho - 1) * (c.rho - 2);
  tp.hP = height_polynomial(c.P);
  tp.C = constant_C(c.rho, eps, tp.hP);

  // Places where the audit applies: poles of x, xbar, y and zeros of d(x).
  std::map<std::string, Place> S;
  for (const auto& p : places_above(c, Center::at_infinity(), opt)) S.emplace(p.key(), p);
  for (const auto& D : {tp.ypoles, tp.xbar_poles})
    for (const auto& [k, e] : D.entries()) S.emplace(k, e.place);
  for (const auto& ce : centers_of(c.d, false))
    for (const auto& p : places_above(c, ce, opt)) S.emplace(p.key(), p);
  const Rational bound = 2 * Rational(c.rho) * tp.hP;
  for (const auto& [k, p] : S) {
    PlaceHeightEntry e{k, p.at_infinity() ? Rational(0) : root_height(p.center().poly), bound, true};
    e.ok = e.height <= bound;
    tp.place_heights_ok = tp.place_heights_ok && e.ok;
    tp.place_heights.push_back(e);
  }
  return tp;
}

HeightLawReport per_place_inequality(const MPoly& Q, const std::optional<Elem>& alpha,
                                     const std::optional<Elem>& beta, long m1, long m2, bool check_zero) {
  if (Q.nvars() != 2) throw InputError("Q must have two variables");
  if (m1 < 1 || m2 < 1) throw InputError("multipliers must be positive");
  const Rational hQ = height_polynomial(Q);
  if (check_zero && alpha && beta) {
    FieldPtr L = alpha->field()->depth() >= beta->field()->depth() ? alpha->field() : beta->field();
    const Elem a = lift_elem(*alpha, L), b = lift_elem(*beta, L);
    if (!L->is_zero(evaluate(Q, L, {a.value(), b.value()}))) throw InputError("the point is not a zero of Q");
  }
  const Rational ha = alpha ? height_element(*alpha) : Rational(0);
  const Rational hb = beta ? height_element(*beta) : Rational(0);
  std::string in = "m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) + " Q=" + Q.to_string();
  return make_report("place-inequality", in, m1 * ha, "<=", m2 * hb + Rational(m1 * m2) * hQ);
}

bool QuasiSample::passed() const {
  if (!upper.ok || !lower.ok) return false;
  for (const auto& r : chain)
    if (!r.satisfied) return false;
  for (const auto& k : chain_constants)
    if (!k.ok) return false;
  return true;
}

bool QuasiReport::passed() const {
  if (!params.degree_ok || !params.place_heights_ok) return false;
  for (const auto& s : samples)
    if (!s.passed()) return false;
  for (const auto& sd : sides) {
    if (!sd.hypotheses_ok || !sd.Q1.annihilates || !sd.Q2.annihilates || !sd.Q1.divides_resultant ||
        !sd.Q2.divides_resultant)
      return false;
    if (sd.Q1_bound.status == "violated" || sd.Q2_bound.status == "violated") return false;
    for (const auto& b : sd.z.checks)
      if (b.status == "violated") return false;
  }
  return true;
}

namespace {

SideData build_side(const CurveModel& c, const TheoremParameters& tp, bool upper, const PlaceOptions& opt) {
  SideData sd;
  sd.side = upper ? "upper" : "lower";
  sd.ctx = divisor_context(c, upper ? tp.D : tp.D_lower, opt);
  sd.z = rr_element(sd.ctx);
  sd.Q1 = minimal_polynomial(c, sd.z.z(), Against::X);
  sd.Q2 = minimal_polynomial(c, sd.z.z(), Against::Y);
  sd.Q1_bound = minimal_polynomial_bound(sd.ctx, sd.Q1);
  sd.Q2_bound = minimal_polynomial_bound(sd.ctx, sd.Q2);
  sd.T = rr_height_constant(sd.ctx, -9);
  const Divisor dz = principal_divisor(c, sd.z.z(), opt);
  const long l1 = tp.lambda.l1, l2 = tp.lambda.l2;
  if (upper)
    sd.hypotheses_ok = divisor_leq(dz.negative(), tp.ypoles.scaled(l1 * c.n)) &&
                       divisor_leq(tp.xbar_poles.scaled(l2 * c.m), dz.positive());
  else
    sd.hypotheses_ok = divisor_leq(dz.negative(), tp.xbar_poles.scaled(l2 * c.m)) &&
                       divisor_leq(tp.ypoles.scaled((2 * l2 - l1) * c.n), dz.positive());
  return sd;
}

struct SampleOut {
  std::vector<QuasiSample> recs;
  std::vector<QuasiSkip> skips;
};

void chain_checks(QuasiSample& s, const CurveModel& c, const TheoremParameters& tp, const SideData& sd,
                  const Elem& a, const Elem& b) {
  const FieldPtr& L = b.field();
  const Value qa = evaluate(sd.z.z().den, L, {a.value(), b.value()});
  const Value ga = evaluate(sd.z.g, L, {a.value(), b.value()});
  std::optional<Elem> zv;
  if (!L->is_zero(qa)) zv = Elem(L, L->div(ga, qa));
  else if (L->is_zero(ga)) {
    s.chain_note += sd.side + ": z is 0/0 at the point; ";
    return;
  }
  const long l1 = tp.lambda.l1, l2 = tp.lambda.l2, m = c.m, n = c.n;
  const MPoly Q1 = sd.Q1.Q, Q2 = sd.Q2.Q;  // in (X, Z) and (Y, Z)
  const Rational h1 = sd.Q1.height, h2 = sd.Q2.height;
  const Rational eps = tp.eps;
  if (sd.side == "upper") {
    s.chain.push_back(per_place_inequality(Q2.with_vars({"Z", "Y"}), zv, b, 1, l1 * n, false));
    s.chain.push_back(per_place_inequality(Q1, a, zv, l2 * m, 1, false));
    s.chain.push_back(make_report("upper-chain", "", Rational(l2 * m) * s.ha, "<=",
                                  Rational(l1 * n) * (s.hb + h2) + Rational(l2 * m) * h1));
    s.chain_constants.push_back(constant_check("upper-3rhoT", Rational(m) * s.ha - (1 + eps) * Rational(n) * s.hb,
                                               times(sd.T, 3 * Rational(tp.rho))));
  } else {
    const long k = (2 * l2 - l1) * n;
    s.chain.push_back(per_place_inequality(Q1.with_vars({"Z", "X"}), zv, a, 1, l2 * m, false));
    s.chain.push_back(per_place_inequality(Q2, b, zv, k, 1, false));
    s.chain.push_back(make_report("lower-chain", "", Rational(k) * s.hb, "<=",
                                  Rational(l2 * m) * (s.ha + h1) + Rational(k) * h2));
    s.chain_constants.push_back(constant_check("lower-3rhoT", (1 - eps) * Rational(n) * s.hb - Rational(m) * s.ha,
                                               times(sd.T, 3 * Rational(tp.rho))));
  }
}

SampleOut process(const CurveModel& c, const MPoly& Pq, const RatFunc& a, const TheoremParameters& tp,
                  const std::vector<SideData>& sides) {
  SampleOut out;
  const std::string atext = a.to_string();
  UPoly Pa = Pq.eval(0, QT()->from_ratfunc(a)).to_upoly(1);
  if (Pa.is_zero()) {
    out.skips.push_back({atext, "P(a, Y) vanishes identically"});
    return out;
  }
  if (Pa.degree() < 1) {
    out.skips.push_back({atext, "P(a, Y) has no root"});
    return out;
  }
  FieldFactorization F;
  try {
    F = factor(Pa);
  } catch (const UnsupportedError& e) {
    out.skips.push_back({atext, std::string("factorization: ") + e.what()});
    return out;
  }
  const Rational ha = height_element(a);
  const Rational eps = tp.eps;
  for (const auto& [f, mult] : F.factors) {
    if (irreducibility_check(f) != IrreducibilityStatus::Irreducible) {
      out.skips.push_back({atext, "factor " + f.to_string() + " not certified irreducible"});
      continue;
    }
    FieldPtr L = f.degree() == 1 ? QT() : extend_field(QT(), f);
    Elem b(L, f.degree() == 1 ? QT()->neg(f.coeff(0)) : L->generator());
    QuasiSample s;
    s.a = atext;
    s.b = b.to_string();
    s.field = L->describe();
    s.ha = ha;
    s.hb = height_element(b);
    s.m_ha = Rational(c.m) * s.ha;
    s.n_hb = Rational(c.n) * s.hb;
    s.upper = constant_check("upper", s.m_ha - (1 + eps) * s.n_hb, tp.C);
    s.lower = constant_check("lower", (1 - eps) * s.n_hb - s.m_ha, tp.C);
    const Elem aL(L, L->lift(QT()->from_ratfunc(a), 0));
    for (const auto& sd : sides) chain_checks(s, c, tp, sd, aL, b);
    out.recs.push_back(std::move(s));
  }
  return out;
}

}  // namespace

QuasiReport quasi_check(const CurveModel& c, const std::vector<RatFunc>& samples, const Rational& eps, Tier tier,
                        const PlaceOptions& opt, int jobs) {
  if (!c.K->is_base()) throw UnsupportedError("quasi-equivalence checks need a curve over Q or Q(t)");
  QuasiReport r;
  r.curve = c.to_string();
  r.tier = tier;
  r.params = theorem_divisor(c, eps, opt);
  if (tier == Tier::Full) {
    r.sides.push_back(build_side(c, r.params, true, opt));
    r.sides.push_back(build_side(c, r.params, false, opt));
  }
  const MPoly Pq = over_qt(c.P);
  std::vector<SampleOut> outs(samples.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < samples.size(); ++i) outs[i] = process(c, Pq, samples[i], r.params, r.sides);
  } else {
    for (std::size_t start = 0; start < samples.size(); start += jobs) {
      std::vector<std::future<SampleOut>> fs;
      for (std::size_t i = start; i < std::min(samples.size(), start + jobs); ++i)
        fs.push_back(std::async(std::launch::async, [&, i] { return process(c, Pq, samples[i], r.params, r.sides); }));
      for (std::size_t i = 0; i < fs.size(); ++i) outs[start + i] = fs[i].get();
    }
  }
  for (auto& o : outs) {
    for (auto& s : o.recs) r.samples.push_back(std::move(s));
    for (auto& s : o.skips) r.skipped.push_back(std::move(s));
  }
  return r;
}

}  // namespace ffh
