#include "ffh/places/curve.hpp"

#include "ffh/core/error.hpp"
#include "ffh/core/parser.hpp"

namespace ffh {

namespace {

// P over Q viewed in Q(t)[Y] with X renamed t.
UPoly as_qt_poly(const MPoly& P) {
  const FieldPtr& Qt = Field::rational_functions();
  const int ix = P.var_index("X"), iy = P.var_index("Y");
  std::vector<std::vector<Rational>> rows(P.degree(iy) + 1);
  for (const auto& [e, v] : P.terms()) {
    Rational r;
    P.field()->is_rational(v, &r);
    auto& row = rows[e[iy]];
    if (static_cast<int>(row.size()) <= e[ix]) row.resize(e[ix] + 1);
    row[e[ix]] += r;
  }
  std::vector<Value> c;
  for (auto& row : rows) c.push_back(Qt->from_ratfunc(RatFunc(QPoly(row))));
  return UPoly(Qt, std::move(c));
}

IrreducibilityStatus irreducible_over_q(const MPoly& P) {
  const int iy = P.var_index("Y");
  if (P.degree(iy) < 1) return IrreducibilityStatus::Unknown;
  // A nonconstant content in X splits off a factor.
  QPoly g;
  UPoly q = as_qt_poly(P);
  for (const auto& v : q.coeffs()) {
    RatFunc r;
    q.field()->in_base(v, &r);
    g = gcd(g, r.num());
  }
  if (g.degree() > 0) return IrreducibilityStatus::Reducible;
  return irreducibility_check(q);
}

}  // namespace

const std::vector<std::string>& CurveModel::vars() {
  static const std::vector<std::string> v{"X", "Y"};
  return v;
}

IrreducibilityStatus bivariate_irreducibility(const MPoly& P) {
  const FieldPtr& K = P.field();
  if (K->depth() > 0) return IrreducibilityStatus::Unknown;
  if (!K->has_t()) return irreducible_over_q(P);
  // Over Q(t): an irreducible specialization of the same degrees certifies
  // irreducibility (a factorization would specialize to one).
  const FieldPtr& Q = Field::rationals();
  const int ix = P.var_index("X"), iy = P.var_index("Y");
  for (long k = 0; k < 12; ++k) {
    const Rational t0 = (k % 2 ? 1 : -1) * ((k + 1) / 2);
    MPoly S(Q, P.vars());
    bool ok = true;
    for (const auto& [e, v] : P.terms()) {
      RatFunc r;
      K->in_base(v, &r);
      Rational x;
      if (!r.try_eval(t0, x)) {
        ok = false;
        break;
      }
      S.add_term(e, Q->from_rational(x));
    }
    if (!ok || S.is_zero()) continue;
    if (S.degree(ix) != P.degree(ix) || S.degree(iy) != P.degree(iy) || S.total_degree() != P.total_degree()) continue;
    if (irreducible_over_q(S) == IrreducibilityStatus::Irreducible) return IrreducibilityStatus::Irreducible;
  }
  return IrreducibilityStatus::Unknown;
}

CurveModel CurveModel::make(const MPoly& P0) {
  CurveModel c;
  c.P = P0.with_vars(vars());
  c.K = c.P.field();
  const int ix = 0, iy = 1;
  c.m = c.P.degree(ix);
  c.n = c.P.degree(iy);
  c.rho = c.P.total_degree();
  if (c.n < 1) throw InputError("curve polynomial must involve Y");
  if (c.P.low_degree(iy) > 0) throw InputError("curve polynomial is divisible by Y");
  if (c.P.low_degree(ix) > 0 && c.n > 0 && c.P.degree(ix) > 0) {
    // X | P means the curve contains the line X = 0.
    throw InputError("curve polynomial is divisible by X");
  }
  auto rows = c.P.coefficients_in(iy);
  for (int i = 0; i <= c.n; ++i) c.A.push_back(rows[c.n - i].with_vars({"X", "Y"}).to_upoly(ix));
  c.d = discriminant(c.P, iy).to_upoly(ix);
  if (c.d.is_zero()) throw InputError("curve polynomial is not squarefree in Y");
  c.irreducible = bivariate_irreducibility(c.P);
  if (c.irreducible == IrreducibilityStatus::Reducible) throw InputError("curve polynomial is reducible");
  return c;
}

CurveModel CurveModel::parse(const std::string& text) {
  ExprPtr e = parse_expression(text);
  for (const char* s : {"z", "Z"})
    if (mentions_symbol(e, s)) throw InputError(std::string("curve polynomial may only use X, Y and t, found ") + s);
  FieldPtr K = natural_base(e);
  return make(to_mpoly(e, K, vars()));
}

}  // namespace ffh
