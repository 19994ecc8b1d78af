#include "ffh/heights/height.hpp"

#include <algorithm>
#include <climits>

#include "ffh/core/error.hpp"
#include "ffh/core/factor.hpp"
#include "ffh/core/linalg.hpp"
#include "ffh/field/tower.hpp"

namespace ffh {

namespace {

long valuation(QPoly q, const QPoly& p) {
  long v = 0;
  while (true) {
    auto [quo, rem] = divrem(q, p);
    if (!rem.is_zero()) return v;
    q = quo;
    ++v;
  }
}

void add_prime(std::vector<QPoly>& primes, const QPoly& q) {
  if (q.degree() <= 0) return;
  for (const auto& [f, m] : factor_univariate_Q(q).factors) {
    (void)m;
    if (std::find(primes.begin(), primes.end(), f) == primes.end()) primes.push_back(f);
  }
}

// Depth-one tower over Q(t): every coordinate is written as N(X, Y)/D(X)
// on the curve M(X, Y) = 0 with X = t and Y the generator.
Rational height_depth_one(const FieldPtr& L, std::vector<Value> coords, const PlaceOptions& opt) {
  const FieldPtr K0 = L->parent();
  const FieldPtr Q = Field::rationals();
  const auto& vars = CurveModel::vars();
  MPoly M(Q, vars);
  auto cs = clear_to_primitive(UPoly(K0, L->modulus()));
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (int e = 0; e <= cs[i].degree(); ++e)
      if (cs[i].coeff(e) != 0) M.add_term({e, static_cast<int>(i)}, Q->from_rational(cs[i].coeff(e)));
  CurveModel c = CurveModel::make(M);

  std::vector<Fraction> fs;
  std::vector<MPoly> dens;
  for (const auto& v : coords) {
    if (L->is_zero(v)) continue;
    QPoly D(1);
    for (const auto& x : v.c) D = lcm(D, x.base.den());
    MPoly num(Q, vars), den(Q, vars);
    for (std::size_t k = 0; k < v.c.size(); ++k) {
      RatFunc r = v.c[k].base * RatFunc(D);
      for (int e = 0; e <= r.num().degree(); ++e)
        if (r.num().coeff(e) != 0) num.add_term({e, static_cast<int>(k)}, Q->from_rational(r.num().coeff(e)));
    }
    for (int e = 0; e <= D.degree(); ++e)
      if (D.coeff(e) != 0) den.add_term({e, 0}, Q->from_rational(D.coeff(e)));
    fs.push_back({num, den});
    dens.push_back(den);
  }
  Integer total = 0;
  for (const auto& center : critical_centers(c, dens)) {
    for (const auto& p : places_above(c, center, opt)) {
      long best = 0;
      for (const auto& f : fs) best = std::max(best, -ord_at(c, p, f, opt));
      total += Integer(best) * p.weight();
    }
  }
  Rational h(total, L->degree());
  h.canonicalize();
  return h;
}

// Rewrites a certified tower of depth > 1 over Q(t) as a single extension
// by the minimal polynomial of a primitive element.
FieldPtr primitive_tower(const FieldPtr& L, std::vector<Value>& coords) {
  if (!L->certified()) throw UnsupportedError("height over a tower with an assumed-irreducible level");
  const int N = L->total_degree();
  const FieldPtr K0 = L->base();
  for (long c = 1; c <= 32; ++c) {
    Value theta = L->zero();
    Rational w = 1;
    for (int d = L->depth(); d >= 1; --d) {
      theta = L->add(theta, L->mul(L->from_rational(w), L->lift(L->ancestor(d)->generator(), d)));
      w *= c;
    }
    UPoly chi = charpoly(Elem(L, theta));
    if (squarefree_part(chi).degree() != N) continue;
    FieldPtr L1 = Field::adjoin(K0, chi.monic().coeffs(), "u1", Irreducibility::Certified);
    Matrix A(N, std::vector<Value>(N));
    Value pw = L->one();
    for (int k = 0; k < N; ++k) {
      auto col = L->coordinates(pw);
      for (int r = 0; r < N; ++r) A[r][k] = Value{col[r], {}};
      pw = L->mul(pw, theta);
    }
    for (auto& v : coords) {
      std::vector<Value> b, x;
      for (const auto& r : L->coordinates(v)) b.push_back(Value{r, {}});
      if (!solve(*K0, A, b, x)) throw Error("primitive element change of basis failed");
      std::vector<RatFunc> rx;
      for (const auto& e : x) rx.push_back(e.base);
      v = L1->from_coordinates(rx);
    }
    return L1;
  }
  throw UnsupportedError("no primitive element found for the tower");
}

}  // namespace

bool descend(const Field& L, const Value& v, int target_depth, Value& out) {
  Value cur = v;
  for (int d = L.depth(); d > target_depth; --d) {
    if (cur.c.size() > 1) return false;
    cur = cur.c.empty() ? Value{} : cur.c[0];
  }
  out = cur;
  return true;
}

Rational height_point(const std::vector<RatFunc>& coords) {
  if (std::all_of(coords.begin(), coords.end(), [](const RatFunc& a) { return a.is_zero(); }))
    throw InputError("projective point with all coordinates zero");
  std::vector<QPoly> primes;
  for (const auto& a : coords) {
    if (a.is_zero()) continue;
    add_prime(primes, a.num());
    add_prime(primes, a.den());
  }
  Integer total = 0;
  for (const auto& p : primes) {
    long best = LONG_MIN;
    for (const auto& a : coords) {
      if (a.is_zero()) continue;
      best = std::max(best, valuation(a.den(), p) - valuation(a.num(), p));
    }
    total += Integer(best) * p.degree();
  }
  long best = LONG_MIN;
  for (const auto& a : coords)
    if (!a.is_zero()) best = std::max<long>(best, a.num().degree() - a.den().degree());
  total += best;
  return Rational(total);
}

Rational height_point(const std::vector<Elem>& coords, const PlaceOptions& opt) {
  if (coords.empty()) throw InputError("empty projective point");
  const FieldPtr L = coords[0].field();
  std::vector<Value> vs;
  for (const auto& e : coords) {
    if (e.field() != L) throw InputError("coordinates lie in different fields");
    vs.push_back(e.value());
  }
  std::size_t k = 0;
  while (k < vs.size() && L->is_zero(vs[k])) ++k;
  if (k == vs.size()) throw InputError("projective point with all coordinates zero");
  if (!L->has_t()) return Rational(0);
  // Smallest ancestor containing every coordinate.
  int depth = 0;
  for (const auto& v : vs) {
    int d = 0;
    Value tmp;
    while (!descend(*L, v, d, tmp)) ++d;
    depth = std::max(depth, d);
  }
  FieldPtr F = L->ancestor(depth);
  for (auto& v : vs) descend(*L, Value(v), depth, v);
  if (depth == 0) {
    std::vector<RatFunc> r;
    for (const auto& v : vs) r.push_back(v.base);
    return height_point(r);
  }
  if (depth > 1) F = primitive_tower(F, vs);
  if (!F->certified()) throw UnsupportedError("height over a tower with an assumed-irreducible level");
  const Value inv = F->inv(vs[k]);
  for (auto& v : vs) v = F->mul(v, inv);
  if (F->degree() == 1) {
    std::vector<RatFunc> r;
    for (const auto& v : vs) {
      RatFunc x;
      F->in_base(v, &x);
      r.push_back(x);
    }
    return height_point(r);
  }
  return height_depth_one(F, vs, opt);
}

Rational height_element(const RatFunc& a) { return height_ratfunc(a); }

Rational height_element(const Elem& a) { return height_tower_element(a); }

Rational height_element_by_places(const Elem& a, const PlaceOptions& opt) {
  return height_point({Elem::rational(a.field(), 1), a}, opt);
}

Rational height_polynomial(const MPoly& q, const PlaceOptions& opt) {
  if (q.is_zero()) throw InputError("height of the zero polynomial");
  if (q.num_terms() == 1) return Rational(0);
  std::vector<Elem> pt;
  for (const auto& [e, v] : q.terms()) pt.emplace_back(q.field(), v);
  return height_point(pt, opt);
}

Rational height_polynomial(const UPoly& q, const PlaceOptions& opt) {
  if (q.is_zero()) throw InputError("height of the zero polynomial");
  std::vector<Elem> pt;
  for (const auto& v : q.coeffs())
    if (!q.field()->is_zero(v)) pt.emplace_back(q.field(), v);
  if (pt.size() == 1) return Rational(0);
  return height_point(pt, opt);
}

}  // namespace ffh
