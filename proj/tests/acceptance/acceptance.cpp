// Acceptance run: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <functional>
#include <set>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ffh/cli/commands.hpp"
#include "ffh/core/error.hpp"
#include "ffh/core/sampler.hpp"
#include "ffh/heights/audit.hpp"
#include "ffh/quasi/quasi.hpp"

using namespace ffh;

namespace {

const FieldPtr Q = Field::rationals();
const FieldPtr QT = Field::rational_functions();

struct Result {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& what) {
    if (ok) note << "first failure: " << what << "; ";
    ok = false;
  }
  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

Elem R(const RatFunc& r) { return Elem(QT, QT->from_ratfunc(r)); }
Fraction frac(const CurveModel& c, const std::string& s) { return to_fraction(parse_expression(s), c.K, CurveModel::vars()); }

const std::vector<std::string> kCorpus = {"Y^2 - X",       "Y^2 - X^3 - 1", "Y^2 - X^2*(X + 1)", "Y^2 - X - t",
                                          "Y^3 - X^2",     "Y^3 + X^3 - 1", "Y^4 - X^3 + X",     "X*Y^2 - 1",
                                          "Y^3 - X*Y + X^4", "Y^2 - 2*X"};
const std::vector<std::string> kCenters = {"0", "1", "-1", "2", "inf", "X^2 + 1"};

std::vector<Center> centers_for(const CurveModel& c) {
  std::vector<Center> out;
  for (const auto& s : kCenters) {
    if (c.K->has_t() && s == "X^2 + 1") continue;
    out.push_back(Center::parse(s, c.K));
  }
  if (c.K->has_t()) out.push_back(Center::parse("t", c.K));
  return out;
}

// P(x(z), y(z)) known to vanish below z^bound.
bool residual_vanishes(const CurveModel& c, const Place& p, long bound) {
  long terms = bound;
  for (int round = 0; round < 8; ++round) {
    Laurent r = evaluate_at(p, c.P, terms);
    if (!r.known_zero()) return false;
    if (r.prec >= bound) return true;
    terms += bound - r.prec;
  }
  return false;
}

MPoly random_poly(Sampler& s, const FieldPtr& K, const std::vector<std::string>& vars, int dx, int dy, bool with_t) {
  MPoly p(K, vars);
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= dy; ++j)
      if (s.integer(0, 2)) {
        RatFunc c = with_t ? RatFunc(s.qpoly(static_cast<int>(s.integer(0, 2)), 4)) : RatFunc(s.rational(4));
        if (!c.is_zero()) p.add_term({i, j}, K->from_ratfunc(c));
      }
  if (p.is_zero()) p.add_term({0, 0}, K->one());
  return p;
}

MPoly random_linear_product(Sampler& s, const FieldPtr& K, int count) {
  MPoly p(K, CurveModel::vars());
  p.add_term({0, 0}, K->one());
  for (int i = 0; i < count; ++i) {
    MPoly f(K, CurveModel::vars());
    f.add_term(s.integer(0, 1) ? Exponents{1, 0} : Exponents{0, 1}, K->one());
    f.add_term({0, 0}, K->from_ratfunc(RatFunc(s.rational(4))));
    p = p * f;
  }
  return p;
}

// 1. Place-enumeration height of (1 : a) against max(deg num, deg den).
void height_definition(Result& r) {
  Sampler s(1);
  for (int i = 0; i < 200; ++i) {
    RatFunc a = s.ratfunc(10, 9);
    const long want = std::max(a.num().degree(), a.den().degree());
    const Rational got = height_point(std::vector<RatFunc>{RatFunc(1), a});
    r.require(got == want, "a = " + a.to_string());
  }
  r.note << "200 samples";
}

// 2. Height laws on seeded random instances.
void height_calculus(Result& r) {
  Sampler s(2);
  const std::vector<std::string> xy = {"X", "Y"};
  std::map<std::string, int> count;
  auto check = [&](const HeightLawReport& h) {
    ++count[h.law];
    r.require(h.satisfied, h.law + " " + h.inputs);
  };
  const std::vector<std::string> v4 = {"X0", "X1", "X2", "X3"};
  for (int i = 0; i < 50; ++i) {
    Elem a = R(s.ratfunc(3, 4)), b = R(s.ratfunc(3, 4));
    while (a.is_zero()) a = R(s.ratfunc(3, 4));
    while (b.is_zero()) b = R(s.ratfunc(3, 4));
    check(law_power(a, s.integer(0, 5)));
    check(law_sum(a, b));
    check(law_product(a, b));
    Rational c1, c2, c3, c4;
    do {
      c1 = s.rational(5), c2 = s.rational(5), c3 = s.rational(5), c4 = s.rational(5);
    } while (c1 * c4 - c2 * c3 == 0);
    check(law_mobius(a, {c1, c2, c3, c4}));
    check(law_concatenation({R(1), a}, {R(1), b, a * b}));
    check(law_coordinate_sum({R(1), a, b}));
    MPoly g = random_poly(s, QT, xy, 2, 1, true), h = random_poly(s, QT, xy, 1, 2, true);
    check(law_resultant(g, h));
    check(law_shift(g, a, b));
    check(law_divisibility(g, h));
    check(law_polynomial_product(g, h));
    check(law_veronese({R(1), a, b}, static_cast<int>(s.integer(1, 3))));
    // Bilinear morphism P^1 x P^1 -> P^1.
    std::vector<MPoly> phi = {MPoly(QT, v4), MPoly(QT, v4)};
    for (auto& f : phi) {
      for (int k = 0; k < 4; ++k) {
        RatFunc cf(s.qpoly(static_cast<int>(s.integer(0, 1)), 3));
        if (!cf.is_zero()) f.add_term({k / 2 == 0 ? 1 : 0, k / 2 == 1 ? 1 : 0, k % 2 == 0 ? 1 : 0, k % 2 == 1 ? 1 : 0},
                                      QT->from_ratfunc(cf));
      }
      if (f.is_zero()) f.add_term({1, 0, 1, 0}, QT->one());
    }
    try {
      check(law_morphism({{R(1), a}, {R(1), b}}, phi));
    } catch (const InputError&) {
      // Undefined at the point; rare and not a law instance.
    }
    MPoly q = random_poly(s, Q, xy, 2, 2, false);
    check(law_polynomial_value(q, {a, b}));
    // H = (X - a) * G(X) has the root a.
    UPoly G = random_poly(s, QT, {"X"}, 2, 0, true).to_upoly(0);
    UPoly H = (UPoly::variable(QT) - UPoly::constant(QT, a.value())) * G;
    check(law_root(H, a));
  }
  for (const auto& [law, n] : count)
    if (n < 50 && law != "morphism") r.fail(law + " ran on " + std::to_string(n) + " instances");
  r.require(count["morphism"] >= 45, "too few morphism instances");
  r.note << count.size() << " laws, " << count["power"] << "+ instances each";
}

// 3. Residuals, ramification and principal divisors on the corpus.
void puiseux(Result& r) {
  Sampler s(3);
  int centers = 0;
  for (const auto& text : kCorpus) {
    auto c = CurveModel::parse(text);
    for (const auto& ce : centers_for(c)) {
      auto ps = places_above(c, ce);
      ++centers;
      r.require(ramification_sum(ps) == c.n, text + " above " + ce.describe());
      for (const auto& p : ps) r.require(residual_vanishes(c, p, 50), text + " residual at " + p.key());
    }
    std::vector<Fraction> fs = {frac(c, "X"), frac(c, "Y")};
    while (fs.size() < 5) {
      MPoly num = random_poly(s, c.K, CurveModel::vars(), 2, 1, false);
      MPoly den = random_poly(s, c.K, CurveModel::vars(), 1, 1, false);
      if (c.K->has_t()) {
        // Generic zeros over Q(t) need huge towers; products of X - a and Y - b stay cheap.
        num = random_linear_product(s, c.K, 2);
        den = random_linear_product(s, c.K, 1);
      }
      if (divides(c.P, num) || divides(c.P, den)) continue;
      fs.push_back({num, den});
    }
    for (const auto& f : fs) {
      PlaceOptions wide;
      wide.tower_budget = 64;  // random zeros can sit above high-degree centers
      auto D = principal_divisor(c, f, wide);
      r.require(D.degree() == 0, text + ": deg divs(" + f.num.to_string() + " / " + f.den.to_string() + ")");
    }
  }
  r.note << kCorpus.size() << " curves, " << centers << " centers";
}

// 4. Coefficient height audits and leading-exponent bounds.
void audits(Result& r) {
  int places = 0, audited = 0;
  for (const auto& text : kCorpus) {
    auto c = CurveModel::parse(text);
    for (const auto& ce : centers_for(c)) {
      for (const auto& p : places_above(c, ce)) {
        ++places;
        auto pa = place_coefficient_audit(c, p, 11);
        if (pa.heights_computable) {
          ++audited;
          r.require(pa.passed(), text + " coefficients at " + p.key());
        }
        for (long l = 0; l <= 20; ++l)
          for (long j = 0; j < c.n; ++j) {
            auto m = monomial_audit(c, p, l, j, 2, false);
            r.require(m.leading_ok && m.leading > -l * c.rho - c.rho * c.rho,
                      text + " leading exponent at " + p.key() + " l=" + std::to_string(l));
          }
      }
    }
  }
  for (const auto& [q, K] : std::vector<std::pair<std::string, FieldPtr>>{
           {"Y^2 - (1 + z)", Q}, {"Y - (1 + t*z)", QT}, {"Y^2 - Y - t*z", QT}, {"Y^3 - (1 + t*z + z^2)", QT}}) {
    auto sa = series_solve_audit(parse_mpoly(q, K, {"z", "Y"}), 11);
    r.require(sa.passed(), "series " + q);
  }
  r.note << audited << "/" << places << " places with computable heights";
}

struct RRCase {
  std::string poly;
  std::vector<std::pair<std::string, long>> parts;  // trailing '!' = first branch only
};

const std::vector<RRCase> kRR = {
    {"Y - X", {{"inf", 2}}},
    {"Y^2 - X", {{"0", 1}}},
    {"Y^2 - X^3 - 1", {{"inf", 3}}},
    {"Y^2 - X^3 - 1", {{"inf", 4}, {"-1", -1}}},
    {"Y^2 - X", {{"inf", 6}, {"-1", -2}}},
    {"Y^2 - X - t", {{"inf", 2}}},
    {"Y^2 - X - t", {{"t", 1}, {"inf", 1}}},
    {"Y^2 - X^3", {{"inf", 1}, {"1!", -1}}},
    {"X*Y^2 - 1", {{"inf", 1}, {"1!", -1}}},
};

Divisor build_divisor(const CurveModel& c, const RRCase& rc) {
  Divisor D;
  for (auto [center, m] : rc.parts) {
    const bool first = center.back() == '!';
    if (first) center.pop_back();
    auto ps = places_above(c, Center::parse(center, c.K));
    if (first) ps.resize(1);
    for (const auto& p : ps) D.add(p, m);
  }
  return D;
}

// 5 and 6. Riemann-Roch elements and their minimal polynomials.
void riemann_roch(Result& r5, Result& r6) {
  int built = 0, minpolys = 0;
  for (const auto& rc : kRR) {
    auto c = CurveModel::parse(rc.poly);
    const Divisor D = build_divisor(c, rc);
    const std::string tag = rc.poly + " " + D.to_string();
    auto ctx = divisor_context(c, D);
    RRElement z;
    try {
      z = rr_element(ctx);
    } catch (const NoSolutionError&) {
      r5.fail(tag + ": no solution");
      continue;
    }
    ++built;
    r5.require(verify_membership(c, D, z.z(), ctx.U).member, tag + " membership");
    for (const auto& b : z.checks) {
      if (b.name == "denominator-degree" || b.name == "ansatz-degree")
        r5.require(b.status == "satisfied", tag + " " + b.name);
      r5.require(b.status != "violated", tag + " " + b.name);
    }
    if (!c.K->has_t()) {
      r5.require(ctx.hD == 0 && z.height_a == 0, tag + " coefficient heights on a constant curve");
    }
    for (Against a : {Against::X, Against::Y}) {
      auto mp = minimal_polynomial(c, z.z(), a);
      ++minpolys;
      r6.require(mp.annihilates && mp.divides_resultant, tag + " certificates of " + mp.Q.to_string());
      if (mp.heights_computable) r6.require(minimal_polynomial_bound(ctx, mp).status == "satisfied", tag + " height bound");
    }
  }
  for (const std::string& p : {std::string("Y^2 - X"), std::string("Y^2 - X^3 - 1")}) {
    auto c = CurveModel::parse(p);
    Divisor D;
    D.add(places_above(c, Center::at_infinity())[0], -1);
    try {
      rr_element(divisor_context(c, D));
      r5.fail(p + ": negative degree divisor produced an element");
    } catch (const NoSolutionError&) {
    }
  }
  r5.note << built << " instances, negative degree gives no solution";
  r6.note << minpolys << " minimal polynomials";
}

std::vector<RatFunc> samples(std::uint64_t seed, int n, int deg) {
  Sampler s(seed);
  std::vector<RatFunc> out;
  for (int i = 0; i < n; ++i) out.push_back(s.ratfunc(deg, 5));
  return out;
}

// 7. Constant-coefficient curves: C = 0 and m h(a) = n h(b).
void exact_regime(Result& r) {
  std::ostringstream counts;
  for (const std::string p : {"Y - X", "Y^2 - X^3 - 1", "Y^2 - X^5 - 1"}) {
    auto c = CurveModel::parse(p);
    for (Rational eps : {Rational(1, 2), Rational(1, 3)}) {
      auto rep = quasi_check(c, samples(7, 12, 6), eps, Tier::Heights);
      r.require(rep.params.C.is_zero(), p + " C = 0");
      r.require(rep.samples.size() >= 10, p + " accepted samples");
      r.require(rep.passed(), p + " inequalities");
      for (const auto& s : rep.samples) r.require(s.m_ha == s.n_hb, p + " equality at a = " + s.a);
      if (eps == Rational(1, 2)) counts << rep.samples.size() << " ";
    }
  }
  r.note << "accepted samples per curve: " << counts.str();
}

// 8. Curves with h(P) > 0, heights and full tier.
void general_regime(Result& r) {
  int recs = 0, chains = 0;
  for (const std::string p : {"Y^2 - X - t", "Y - X^2 - t", "Y^2 - X - t^2"}) {
    auto c = CurveModel::parse(p);
    for (Rational eps : {Rational(1, 2), Rational(1, 3)}) {
      const std::string tag = p + " eps=" + to_short(eps);
      auto rep = quasi_check(c, samples(8, 6, 3), eps, Tier::Full);
      const auto& tp = rep.params;
      const auto& l = tp.lambda;
      r.require(tp.hP > 0, tag + " h(P) > 0");
      r.require(Rational(l.l1 - l.l2) >= Rational(tp.rho, 2) - 1, tag + " lambda1 - lambda2");
      r.require(Rational(l.l1, l.l2) <= 1 + eps, tag + " lambda1 / lambda2");
      r.require(Rational(l.l1 + l.l2) <= 2 * Rational(tp.rho + 1) / eps, tag + " lambda1 + lambda2");
      r.require(tp.degree_ok, tag + " degree");
      r.require(tp.place_heights_ok, tag + " place heights");
      for (const auto& sd : rep.sides) {
        r.require(sd.hypotheses_ok, tag + " " + sd.side + " divisor hypotheses");
        r.require(sd.Q1.heights_computable && sd.Q2.heights_computable, tag + " h(Q) computed");
        r.require(sd.Q1.annihilates && sd.Q2.annihilates, tag + " annihilation");
      }
      r.require(rep.sides.size() == 2, tag + " sides");
      for (const auto& s : rep.samples) {
        ++recs;
        r.require(s.upper.ok && s.lower.ok, tag + " theorem inequalities at a = " + s.a);
        for (const auto& h : s.chain) {
          ++chains;
          r.require(h.satisfied, tag + " " + h.law + " at a = " + s.a);
        }
        for (const auto& k : s.chain_constants) r.require(k.ok, tag + " " + k.name + " at a = " + s.a);
      }
      r.require(rep.passed(), tag + " report");
    }
  }
  r.require(chains > 0, "no per-place inequalities ran");
  r.note << recs << " records, " << chains << " per-place inequalities";
}

// 9. Same command and seed, same bytes.
void determinism(Result& r) {
  using namespace ffh::cli;
  const std::vector<Command> cmds = {
      {"quasi-check", {{"poly", {"Y^2 - X - t"}}, {"epsilon", {"1/3"}}, {"samples", {"auto:6"}}, {"tier", {"full"}}, {"seed", {"5"}}}},
      {"quasi-check", {{"poly", {"Y^2 - X^3 - 1"}}, {"epsilon", {"1/2"}}, {"samples", {"auto:10"}}, {"seed", {"9"}}}},
      {"rr", {{"poly", {"Y^2 - X^3 - 1"}}, {"divisor", {R"([{"center":"inf","branch":0,"multiplicity":4}])"}}}},
      {"places", {{"poly", {"Y^2 - X^3 - t"}}, {"center", {"t"}}, {"prec", {"6"}}}},
  };
  for (const auto& c : cmds) {
    const std::string a = render(run_command(c).report);
    const std::string b = render(run_command(c).report);
    Command par = c;
    par.options["jobs"] = {"4"};
    const std::string p = render(run_command(par).report);
    r.require(a == b, c.verb + " repeated run differs");
    r.require(a == p, c.verb + " parallel run differs");
  }
  r.note << cmds.size() << " commands, 3 runs each";
}

}  // namespace

// Optional arguments pick criteria by number; criterion 6 needs 5.
int main(int argc, char** argv) {
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
  if (pick.count(6)) pick.insert(5);
  struct Criterion {
    int id;
    std::string name;
    double limit;  // seconds
    std::function<void(Result&)> run;
  };
  Result r6;
  const std::vector<Criterion> all = {
      {1, "height definition consistency", 10, height_definition},
      {2, "height calculus", 60, height_calculus},
      {3, "Puiseux expansions", 120, puiseux},
      {4, "coefficient height audits", 120, audits},
      {5, "Riemann-Roch construction", 600, [&](Result& r) { riemann_roch(r, r6); }},
      {6, "minimal polynomials", 0, [&](Result& r) {
         r.ok = r6.ok;
         r.note << r6.note.str();
       }},
      {7, "exact regime on constant curves", 60, exact_regime},
      {8, "general regime", 1800, general_regime},
      {9, "determinism", 0, determinism},
  };
  bool ok = true;
  for (const auto& c : all) {
    if (!pick.empty() && !pick.count(c.id)) continue;
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && dt > c.limit) r.fail("runtime over " + std::to_string(static_cast<int>(c.limit)) + " s");
    ok = ok && r.ok;
    std::cout << (r.ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << "  (" << std::fixed << std::setprecision(2)
              << dt << " s)  " << r.note.str() << std::endl;
  }
  return ok ? 0 : 1;
}
