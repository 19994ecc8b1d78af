#include "ffh/heights/audit.hpp"

#include "ffh/core/error.hpp"
#include "ffh/field/tower.hpp"

namespace ffh {

namespace {

bool computable(const FieldPtr& F) { return !F->has_t() || F->certified(); }

AuditEntry entry(long index, const Elem& v, const Rational& bound, bool with_height) {
  AuditEntry e;
  e.index = index;
  e.value = v;
  e.bound = bound;
  if (with_height) {
    e.height = height_element(v);
    e.ok = e.height <= bound;
  }
  return e;
}

// A root of p in its field, adjoining one when there is no linear factor.
Value some_root(const UPoly& p, int branch, FieldPtr& F, const FieldPtr& K, int budget) {
  auto fs = irreducible_factors(squarefree_part(p));
  std::vector<Value> roots;
  for (const auto& f : fs)
    if (f.degree() == 1) roots.push_back(F->neg(f.coeff(0)));
  if (branch < static_cast<int>(roots.size())) return roots[branch];
  branch -= static_cast<int>(roots.size());
  for (const auto& f : fs) {
    if (f.degree() == 1) continue;
    if (branch-- > 0) continue;
    FieldPtr F2 = Field::adjoin(F, f.coeffs(), "u" + std::to_string(F->depth() + 1), Irreducibility::Certified);
    if (F2->total_degree() / K->total_degree() > budget)
      throw UnsupportedError("series coefficients need a field beyond the tower budget");
    F = F2;
    return F->generator();
  }
  throw InputError("branch index out of range");
}

}  // namespace

bool SeriesAudit::passed() const {
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

bool MonomialAudit::passed() const {
  if (!leading_ok) return false;
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

SeriesAudit series_solve_audit(const MPoly& q0, long terms, int branch, int tower_budget) {
  if (q0.is_zero()) throw InputError("zero polynomial");
  const std::vector<std::string> vars = {"z", "Y"};
  MPoly q = q0.with_vars(vars);
  const FieldPtr K = q.field();
  SeriesAudit out;
  out.n = q.degree(1);
  if (out.n < 1) throw InputError("polynomial must involve Y");
  out.hq = height_polynomial(q);
  FieldPtr F = K;
  MPoly Qi = q.shift_exponent(0, -q.low_degree(0));
  std::vector<Value> a;
  for (long i = 0; i < terms; ++i) {
    UPoly q0y = Qi.eval(0, F->zero()).to_upoly(1);
    if (q0y.degree() < 1) throw InputError("no power series solution through the chosen root at index " + std::to_string(i));
    FieldPtr before = F;
    Value r = some_root(q0y, i == 0 ? branch : 0, F, K, tower_budget);
    if (F != before) {
      Qi = Qi.lift_to(F);
      for (auto& v : a) v = F->lift(v, before->depth());
    }
    a.push_back(r);
    MPoly z = MPoly::variable(F, vars, "z"), Y = MPoly::variable(F, vars, "Y");
    Qi = Qi.substitute(1, MPoly::constant(F, vars, r) + z * Y);
    Qi = Qi.shift_exponent(0, -Qi.low_degree(0));
  }
  out.field = F;
  out.heights_computable = computable(F);
  Rational pw = 1;
  for (long i = 0; i < terms; ++i) {
    out.entries.push_back(entry(i, Elem(F, a[i]), pw * out.hq, out.heights_computable));
    pw *= out.n + 1;
  }
  return out;
}

SeriesAudit place_coefficient_audit(const CurveModel& c, const Place& p, long terms) {
  SeriesAudit out;
  out.field = p.field();
  out.n = c.n;
  out.hq = height_polynomial(c.P);
  out.heights_computable = computable(p.field());
  Rational base = out.hq;
  if (out.heights_computable && !p.at_infinity()) {
    Rational ha = height_element(Elem(p.field(), p.a()));
    if (ha > base) base = ha;
  }
  const auto cs = p.coefficients(terms);
  Rational pw = c.rho + 1;
  for (long i = 0; i < terms; ++i) {
    out.entries.push_back(entry(i, Elem(p.field(), cs[i]), pw * base, out.heights_computable));
    pw *= c.rho + 1;
  }
  return out;
}

MonomialAudit monomial_audit(const CurveModel& c, const Place& p, long l, long j, long terms, bool with_heights) {
  MonomialAudit out;
  out.l = l;
  out.j = j;
  MonomialExpansion me = expand_monomial(p, l, j, terms + l * std::abs(p.mu()));
  out.leading = me.leading;
  out.offset = me.series_offset;
  out.bound = -l * c.rho - static_cast<long>(c.rho) * c.rho;
  out.leading_ok = out.leading > out.bound && out.offset > out.bound && out.leading >= out.offset;
  out.heights_computable = computable(p.field());
  if (!with_heights) return out;
  Rational base = height_polynomial(c.P);
  if (out.heights_computable && !p.at_infinity()) {
    Rational ha = height_element(Elem(p.field(), p.a()));
    if (ha > base) base = ha;
  }
  const Rational r1 = c.rho + 1;
  for (long s = 0; s < terms && s < static_cast<long>(me.beta.size()); ++s) {
    const Rational bound = ((s + 1) * (s + 1) * rpow(r1, static_cast<unsigned long>(s + 2)) + l) * base;
    out.entries.push_back(entry(s, Elem(p.field(), me.beta[s]), bound, out.heights_computable));
  }
  return out;
}

}  // namespace ffh
