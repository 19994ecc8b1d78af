#include "ffh/field/tower.hpp"

#include <algorithm>

#include "ffh/core/error.hpp"
#include "ffh/core/factor.hpp"
#include "factor_internal.hpp"

namespace ffh {

namespace {

QPoly to_qpoly(const UPoly& p) {
  std::vector<Rational> c;
  for (const auto& v : p.coeffs()) {
    Rational r;
    if (!p.field()->is_rational(v, &r)) throw InputError("coefficient is not rational");
    c.push_back(r);
  }
  return QPoly(c);
}

void sort_factors(std::vector<UPoly>& fs) {
  std::stable_sort(fs.begin(), fs.end(), [](const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const std::string sa = a.to_string(), sb = b.to_string();
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
  });
}

// Newton interpolation through (x_j, y_j) with x_j = j.
UPoly interpolate(const FieldPtr& K, const std::vector<Value>& y) {
  const std::size_t n = y.size();
  std::vector<Value> d = y;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t j = n - 1; j >= k; --j)
      d[j] = K->mul_base(K->sub(d[j], d[j - 1]), RatFunc(Rational(1, static_cast<long>(k))));
  UPoly r(K);
  for (std::size_t k = n; k-- > 0;) {
    r = r * UPoly(K, {K->from_rational(-static_cast<long>(k)), K->one()}) + UPoly::constant(K, d[k]);
  }
  return r;
}

// Norm over the parent field of f(Z - s*alpha).
UPoly shifted_norm(const UPoly& f, long s) {
  const FieldPtr& L = f.field();
  const FieldPtr& K = L->parent();
  const Value alpha = L->generator();
  const UPoly m(K, L->modulus());
  const int D = L->degree() * f.degree();
  std::vector<Value> vals;
  for (int j = 0; j <= D; ++j) {
    Value z = L->sub(L->from_rational(j), L->mul(L->from_rational(s), alpha));
    Value w = f.eval(z);
    vals.push_back(resultant(m, UPoly(K, w.c)));
  }
  return interpolate(K, vals);
}

std::vector<UPoly> factor_squarefree_tower(const UPoly& f) {
  const FieldPtr& L = f.field();
  for (long k = 0; k < 40; ++k) {
    const long s = (k % 2 ? 1 : -1) * ((k + 1) / 2);
    UPoly N = shifted_norm(f, s);
    if (gcd(N, N.derivative()).degree() > 0) continue;
    auto parts = irreducible_factors(N);
    if (parts.size() == 1) return {f.monic()};
    const Value shift = L->mul(L->from_rational(s), L->generator());
    std::vector<UPoly> out;
    for (const auto& Ni : parts) {
      UPoly h = gcd(f, Ni.lift_to(L).shift(shift));
      if (h.degree() > 0) out.push_back(h.monic());
    }
    return out;
  }
  throw UnsupportedError("no squarefree norm found for factorization over " + L->describe());
}

}  // namespace

std::vector<QPoly> clear_to_primitive(const UPoly& p) {
  const FieldPtr& K = p.field();
  QPoly den(1);
  std::vector<RatFunc> c;
  for (const auto& v : p.coeffs()) {
    RatFunc r;
    if (!K->in_base(v, &r)) throw InputError("coefficient outside the base field");
    c.push_back(r);
    den = lcm(den, r.den());
  }
  std::vector<QPoly> out;
  QPoly g;
  for (const auto& r : c) {
    out.push_back(r.num() * divexact(den, r.den()));
    g = gcd(g, out.back());
  }
  if (!g.is_zero() && !g.is_one())
    for (auto& x : out) x = divexact(x, g);
  return out;
}

std::vector<UPoly> irreducible_factors(const UPoly& p) {
  const FieldPtr& K = p.field();
  std::vector<UPoly> out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) return {p.monic()};
  if (K->is_base() && !K->has_t()) {
    for (const auto& g : ffh::irreducible_factors(to_qpoly(p))) out.push_back(UPoly::from_qpoly(K, g));
    return out;
  }
  if (K->is_base()) out = detail::factor_squarefree_qt(p.monic());
  else out = factor_squarefree_tower(p.monic());
  sort_factors(out);
  return out;
}

FieldFactorization factor(const UPoly& p) {
  if (p.is_zero()) throw InputError("factorization of the zero polynomial");
  FieldFactorization out;
  out.unit = p.lead();
  for (const auto& [f, m] : squarefree_decomposition(p))
    for (const auto& g : irreducible_factors(f)) out.factors.emplace_back(g, m);
  return out;
}

const char* to_string(IrreducibilityStatus s) {
  switch (s) {
    case IrreducibilityStatus::Irreducible: return "irreducible";
    case IrreducibilityStatus::Reducible: return "reducible";
    case IrreducibilityStatus::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Eisenstein at an irreducible p of Q[t] for a primitive polynomial over Q[t].
bool eisenstein(const std::vector<QPoly>& c) {
  const QPoly& c0 = c.front();
  if (c0.is_zero() || c0.is_constant()) return false;
  for (const auto& p : ffh::irreducible_factors(squarefree_part(c0))) {
    bool ok = !divrem(c.back(), p).second.is_zero() && !divrem(c0, p * p).second.is_zero();
    for (std::size_t i = 0; ok && i + 1 < c.size(); ++i) ok = divrem(c[i], p).second.is_zero();
    if (ok) return true;
  }
  return false;
}

}  // namespace

IrreducibilityStatus irreducibility_check(const UPoly& m) {
  if (m.degree() < 1) throw InputError("irreducibility check of a constant");
  if (m.degree() == 1) return IrreducibilityStatus::Irreducible;
  try {
    if (gcd(m, m.derivative()).degree() > 0) return IrreducibilityStatus::Reducible;
    const FieldPtr& K = m.field();
    if (K->is_base() && K->has_t() && eisenstein(clear_to_primitive(m))) return IrreducibilityStatus::Irreducible;
    return irreducible_factors(m).size() == 1 ? IrreducibilityStatus::Irreducible : IrreducibilityStatus::Reducible;
  } catch (const UnsupportedError&) {
    return IrreducibilityStatus::Unknown;
  } catch (const ZeroDivisorError&) {
    return IrreducibilityStatus::Unknown;
  }
}

FieldPtr extend_field(const FieldPtr& f, const UPoly& m, bool allow_assumed) {
  if (m.field().get() != f.get()) throw InputError("defining polynomial is not over the field being extended");
  if (m.degree() < 1) throw InputError("defining polynomial must be nonconstant");
  if (!f->is_one(m.lead())) throw InputError("defining polynomial must be monic");
  Irreducibility status = Irreducibility::Certified;
  switch (irreducibility_check(m)) {
    case IrreducibilityStatus::Irreducible: break;
    case IrreducibilityStatus::Reducible: throw InputError("defining polynomial is reducible");
    case IrreducibilityStatus::Unknown:
      if (!allow_assumed) throw UnsupportedError("irreducibility of the defining polynomial is undecided");
      status = Irreducibility::Assumed;
  }
  return Field::adjoin(f, m.coeffs(), "u" + std::to_string(f->depth() + 1), status);
}

UPoly charpoly(const Elem& e) {
  const FieldPtr& L = e.field();
  if (!L->certified()) throw UnsupportedError("characteristic polynomial over an uncertified tower level");
  const FieldPtr B = L->base();
  const int n = L->total_degree();
  // Multiplication matrix over the base field.
  std::vector<std::vector<RatFunc>> H(n, std::vector<RatFunc>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<RatFunc> unit(n);
    unit[j] = RatFunc(1);
    auto col = L->coordinates(L->mul(e.value(), L->from_coordinates(unit)));
    for (int i = 0; i < n; ++i) H[i][j] = col[i];
  }
  // Reduction to upper Hessenberg form by similarity transforms.
  for (int m = 1; m + 1 < n; ++m) {
    int i = m;
    while (i < n && H[i][m - 1].is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(H[i], H[m]);
      for (int r = 0; r < n; ++r) std::swap(H[r][i], H[r][m]);
    }
    const RatFunc piv = H[m][m - 1].inverse();
    for (int i2 = m + 1; i2 < n; ++i2) {
      RatFunc u = H[i2][m - 1] * piv;
      if (u.is_zero()) continue;
      for (int c = 0; c < n; ++c) H[i2][c] -= u * H[m][c];
      for (int r = 0; r < n; ++r) H[r][m] += u * H[r][i2];
    }
  }
  auto bv = [&](const RatFunc& r) { return B->from_ratfunc(r); };
  std::vector<UPoly> p;
  p.push_back(UPoly::constant(B, B->one()));
  for (int m = 1; m <= n; ++m) {
    UPoly pm = UPoly(B, {bv(-H[m - 1][m - 1]), B->one()}) * p[m - 1];
    RatFunc t(1);
    for (int i = 1; i <= m - 1; ++i) {
      t *= H[m - i][m - i - 1];
      pm = pm - p[m - i - 1].scale(bv(t * H[m - i - 1][m - 1]));
    }
    p.push_back(pm);
  }
  return p[n];
}

UPoly minimal_polynomial(const Elem& e) { return squarefree_part(charpoly(e)); }

Rational height_ratfunc(const RatFunc& a) { return Rational(a.degree() < 0 ? 0 : a.degree()); }

Rational height_tower_element(const Elem& e) {
  if (!e.field()->has_t()) return Rational(0);
  if (e.field()->is_base()) {
    RatFunc r;
    e.field()->in_base(e.value(), &r);
    return height_ratfunc(r);
  }
  if (!e.field()->certified()) throw UnsupportedError("height over a tower with an assumed-irreducible level");
  UPoly chi = charpoly(e);
  int dt = 0;
  for (const auto& c : clear_to_primitive(chi)) dt = std::max(dt, c.degree());
  Rational h(dt, chi.degree());
  h.canonicalize();
  return h;
}

}  // namespace ffh
