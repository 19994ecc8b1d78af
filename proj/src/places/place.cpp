// Newton-Puiseux expansion of the places of a plane curve above a center.

#include "ffh/places/place.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ffh/core/error.hpp"

namespace ffh {

namespace {

// Dense bivariate polynomial: c[j][i] is the coefficient of Y^j w^i.
struct BiPoly {
  FieldPtr K;
  std::vector<std::vector<Value>> c;
};

void trim_row(const Field& K, std::vector<Value>& r) {
  while (!r.empty() && K.is_zero(r.back())) r.pop_back();
}

int low(const Field& K, const std::vector<Value>& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!K.is_zero(r[i])) return static_cast<int>(i);
  return -1;
}

BiPoly lift(const BiPoly& H, const FieldPtr& L) {
  if (H.K.get() == L.get()) return H;
  BiPoly r{L, H.c};
  for (auto& row : r.c)
    for (auto& v : row) v = L->lift(v, H.K->depth());
  return r;
}

// w^(-v) H(w^q, w^p (c + Y)); every exponent is known to be >= v.
BiPoly substitute(const BiPoly& H, long q, long p, long v, const Value& c) {
  const Field& F = *H.K;
  const std::size_t n = H.c.size();
  std::vector<Value> cp(n + 1);
  cp[0] = F.one();
  for (std::size_t k = 1; k <= n; ++k) cp[k] = F.mul(cp[k - 1], c);
  BiPoly R{H.K, std::vector<std::vector<Value>>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    const auto& row = H.c[j];
    std::vector<Integer> binom(j + 1);
    binom[0] = 1;
    for (std::size_t k = 1; k <= j; ++k) binom[k] = binom[k - 1] * static_cast<long>(j - k + 1) / static_cast<long>(k);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (F.is_zero(row[i])) continue;
      const long e = q * static_cast<long>(i) + p * static_cast<long>(j) - v;
      if (e < 0) throw Error("negative exponent in Newton-Puiseux substitution");
      for (std::size_t k = 0; k <= j; ++k) {
        Value term = F.mul(row[i], F.mul(cp[j - k], F.from_rational(Rational(binom[k]))));
        auto& out = R.c[k];
        if (out.size() <= static_cast<std::size_t>(e)) out.resize(e + 1, Value{});
        out[e] = F.add(out[e], term);
      }
    }
  }
  for (auto& row : R.c) trim_row(F, row);
  return R;
}

// Truncated power series helpers (index = exponent).
using Ser = std::vector<Value>;

Ser ser_mul(const Field& F, const Ser& a, const Ser& b, std::size_t L) {
  Ser r(L, Value{});
  for (std::size_t i = 0; i < a.size() && i < L; ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j < L; ++j)
      if (!F.is_zero(b[j])) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return r;
}

Ser ser_inv(const Field& F, const Ser& a, std::size_t L) {
  Ser r(L, Value{});
  const Value a0 = F.inv(a.at(0));
  for (std::size_t n = 0; n < L; ++n) {
    Value acc = n == 0 ? F.one() : F.zero();
    for (std::size_t i = 1; i <= n && i < a.size(); ++i)
      if (!F.is_zero(a[i])) acc = F.sub(acc, F.mul(a[i], r[n - i]));
    r[n] = F.mul(acc, a0);
  }
  return r;
}

// H(w, T) mod w^L by Horner in Y.
Ser ser_eval(const BiPoly& H, const Ser& T, std::size_t L) {
  const Field& F = *H.K;
  Ser acc(L, Value{});
  for (std::size_t j = H.c.size(); j-- > 0;) {
    acc = ser_mul(F, acc, T, L);
    const auto& row = H.c[j];
    for (std::size_t i = 0; i < row.size() && i < L; ++i) acc[i] = F.add(acc[i], row[i]);
  }
  return acc;
}

BiPoly derivative_y(const BiPoly& H) {
  BiPoly D{H.K, {}};
  for (std::size_t j = 1; j < H.c.size(); ++j) {
    std::vector<Value> row = H.c[j];
    for (auto& v : row) v = H.K->mul(v, H.K->from_rational(static_cast<long>(j)));
    D.c.push_back(std::move(row));
  }
  if (D.c.empty()) D.c.emplace_back();
  return D;
}

long budget_degree(const FieldPtr& F, const FieldPtr& K) { return F->total_degree() / K->total_degree(); }

}  // namespace

struct Place::Impl {
  FieldPtr F;
  Center center;
  Value a;
  long Q = 1;
  long weight = 1;
  int branch = 0;
  std::string key;
  std::vector<std::pair<long, Value>> head;
  long E = 0;
  bool has_tail = false;
  BiPoly H, HY;
  Ser T;
  long nu = 0;
  std::mutex lock;

  void extend_tail(std::size_t L) {
    const Field& K = *F;
    if (T.empty()) T.push_back(Value{});
    while (T.size() < L) {
      const std::size_t L2 = std::min(L, 2 * T.size());
      Ser h = ser_eval(H, T, L2);
      Ser hy = ser_eval(HY, T, L2);
      Ser delta = ser_mul(K, h, ser_inv(K, hy, L2), L2);
      Ser next(L2, Value{});
      for (std::size_t i = 0; i < L2; ++i) next[i] = K.sub(i < T.size() ? T[i] : Value{}, delta[i]);
      T = std::move(next);
    }
  }
};

const FieldPtr& Place::field() const { return d_->F; }
const Center& Place::center() const { return d_->center; }
bool Place::at_infinity() const { return d_->center.infinite; }
const Value& Place::a() const { return d_->a; }
long Place::mu() const { return d_->center.infinite ? -d_->Q : d_->Q; }
long Place::nu() const { return d_->nu; }
long Place::weight() const { return d_->weight; }
int Place::branch() const { return d_->branch; }
std::string Place::key() const { return d_->key; }

Laurent Place::x_series() const {
  const FieldPtr& F = d_->F;
  Laurent x = Laurent::monomial(F, F->one(), mu());
  if (!at_infinity()) x = x + Laurent::constant(F, d_->a);
  return x;
}

Laurent Place::y_series(long terms) const {
  Impl& d = *d_;
  const FieldPtr& F = d.F;
  Laurent y(F);
  for (const auto& [e, v] : d.head) y = y + Laurent::monomial(F, v, e);
  if (!d.has_tail) return y;
  std::lock_guard<std::mutex> g(d.lock);
  const long need = d.nu + std::max(terms, 1L) - d.E;
  if (need > 0) d.extend_tail(static_cast<std::size_t>(need));
  Laurent tail(F);
  tail.val = d.E;
  tail.c = d.T;
  tail.prec = d.E + static_cast<long>(d.T.size());
  tail.normalize();
  return y + tail;
}

std::vector<Value> Place::coefficients(long terms) const {
  Laurent y = y_series(terms);
  std::vector<Value> b;
  for (long i = 0; i < terms; ++i) b.push_back(y.coeff(d_->nu + i));
  return b;
}

long Place::cached_terms() const {
  if (!d_->has_tail) return Laurent::kExact;
  std::lock_guard<std::mutex> g(d_->lock);
  return d_->E + static_cast<long>(d_->T.size()) - d_->nu;
}

Center Center::at(const FieldPtr& K, const Value& a) { return Center{false, UPoly(K, {K->neg(a), K->one()})}; }

Center Center::root_of(const UPoly& m) {
  if (m.degree() < 1) throw InputError("center polynomial must be nonconstant");
  UPoly p = m.monic();
  if (p.degree() > 1) {
    auto s = irreducibility_check(p);
    if (s == IrreducibilityStatus::Reducible) throw InputError("center polynomial " + p.to_string("X") + " is reducible");
    if (s == IrreducibilityStatus::Unknown) throw UnsupportedError("cannot certify irreducibility of center polynomial");
  }
  return Center{false, p};
}

Center Center::parse(const std::string& text, const FieldPtr& K) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s == "inf" || s == "infinity") return at_infinity();
  ExprPtr e = parse_expression(text);
  if (mentions_symbol(e, "X")) return root_of(to_mpoly(e, K, {"X"}).to_upoly(0));
  return at(K, to_elem(e, K).value());
}

std::string Center::describe() const {
  if (infinite) return "inf";
  const FieldPtr& K = poly.field();
  if (poly.degree() == 1) return K->render(K->neg(poly.coeff(0)));
  return "root(" + poly.to_string("X") + ")";
}

NormalForm normalize_parametrization(long mu, const Laurent& y) {
  if (mu == 0) throw InputError("parametrization with mu = 0");
  if (y.known_zero()) throw InputError("parametrization with y known to be zero");
  long g = std::labs(mu);
  const long end = y.exact() ? y.val + static_cast<long>(y.c.size()) : y.prec;
  for (long e = y.val; e < end && g > 1; ++e)
    if (!y.K->is_zero(y.coeff(e))) g = std::gcd(g, std::labs(e));
  NormalForm nf;
  nf.reduction = g;
  nf.mu = mu / g;
  nf.nu = y.val / g;
  for (long e = y.val; e < end; e += g) nf.b.push_back(y.coeff(e));
  while (!nf.b.empty() && y.K->is_zero(nf.b.back())) nf.b.pop_back();
  return nf;
}

namespace {

struct Branch {
  FieldPtr F;
  BiPoly H;
  std::vector<std::pair<long, Value>> head;
  long E = 0;
  long Q = 1;
  long weight = 1;
};

struct Search {
  const CurveModel& curve;
  const Center& center;
  const PlaceOptions& opt;
  Value a;  // center in the center field
  std::vector<std::shared_ptr<Place::Impl>> out;

  void emit(const Branch& b, bool tail) {
    auto d = std::make_shared<Place::Impl>();
    d->F = b.F;
    d->center = center;
    d->Q = b.Q;
    d->weight = b.weight * center.degree();
    d->head = b.head;
    d->E = b.E;
    d->has_tail = tail;
    if (tail) {
      d->H = b.H;
      d->HY = derivative_y(b.H);
    }
    d->nu = b.head.front().first;
    long g = b.Q;
    for (const auto& [e, v] : b.head) g = std::gcd(g, std::labs(e));
    if (g != 1) throw Error("Newton-Puiseux produced a non-primitive parametrization");
    out.push_back(d);
  }

  void descend(Branch b, int jhi, bool first) {
    const Field& F = *b.F;
    const auto& rows = b.H.c;
    if (!first && jhi == 1) {
      emit(b, true);
      return;
    }
    int jlo = 0;
    if (!first && low(F, rows[0]) < 0) {
      // Y = 0 is an exact root of the current polynomial.
      emit(b, false);
      jlo = 1;
      while (jlo <= jhi && jlo < static_cast<int>(rows.size()) && low(F, rows[jlo]) < 0) ++jlo;
      if (jlo != 1) throw Error("repeated exact root in Newton-Puiseux");
    }
    // Lower convex hull of (j, ord_w row j) for j in [jlo, jhi].
    std::vector<std::pair<long, long>> pts;
    for (int j = jlo; j <= jhi && j < static_cast<int>(rows.size()); ++j) {
      int v = low(F, rows[j]);
      if (v >= 0) pts.emplace_back(j, v);
    }
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
      while (hull.size() >= 2) {
        const auto& o = hull[hull.size() - 2];
        const auto& m = hull.back();
        // Pop m when it lies on or above the segment o-pt.
        const long cross = (m.first - o.first) * (pt.second - o.second) - (m.second - o.second) * (pt.first - o.first);
        if (cross <= 0) hull.pop_back();
        else break;
      }
      hull.push_back(pt);
    }
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
      const auto [j1, v1] = hull[h];
      const auto [j2, v2] = hull[h + 1];
      long num = v1 - v2, den = j2 - j1;
      const long gg = std::gcd(std::labs(num), den);
      const long p = num / gg, q = den / gg;
      // Edge polynomial psi(d), d standing for c^q.
      std::vector<Value> psi;
      for (long k = 0; j1 + k * q <= j2; ++k) {
        const auto& row = rows[j1 + k * q];
        const long i = v1 - k * p;
        psi.push_back(i >= 0 && i < static_cast<long>(row.size()) ? row[i] : Value{});
      }
      UPoly psi_poly(b.F, psi);
      const long v = q * v1 + p * j1;
      for (const auto& [f, r] : factor(psi_poly).factors) {
        UPoly g = f;
        if (q > 1) {
          UPoly cq = UPoly::monomial(b.F, F.one(), static_cast<int>(q));
          g = irreducible_factors(f.compose(cq)).front();
        }
        FieldPtr F2 = b.F;
        Value c;
        if (g.degree() == 1) c = F.neg(g.coeff(0));
        else {
          F2 = Field::adjoin(b.F, g.coeffs(), "u" + std::to_string(b.F->depth() + 1), Irreducibility::Certified);
          if (budget_degree(F2, curve.K) > opt.tower_budget)
            throw UnsupportedError("place coefficients need a field of degree " + std::to_string(budget_degree(F2, curve.K)) +
                                   " over the curve field, above the tower budget " + std::to_string(opt.tower_budget));
          c = F2->generator();
        }
        Branch nb;
        nb.F = F2;
        nb.H = substitute(lift(b.H, F2), q, p, v, c);
        for (const auto& [e, val] : b.head) nb.head.emplace_back(e * q, F2->lift(val, b.F->depth()));
        nb.E = b.E * q + p;
        nb.head.emplace_back(nb.E, c);
        nb.Q = b.Q * q;
        nb.weight = b.weight * f.degree();
        descend(std::move(nb), r, false);
      }
    }
  }
};

}  // namespace

std::vector<Place> places_above(const CurveModel& c, const Center& center, const PlaceOptions& opt) {
  const FieldPtr& K = c.K;
  FieldPtr F0 = K;
  Value a = K->zero();
  if (!center.infinite) {
    if (center.poly.field().get() != K.get()) throw InputError("center is not over the curve field");
    if (center.poly.degree() == 1) a = K->neg(center.poly.coeff(0));
    else {
      F0 = Field::adjoin(K, center.poly.coeffs(), "u" + std::to_string(K->depth() + 1), Irreducibility::Certified);
      if (budget_degree(F0, K) > opt.tower_budget) throw UnsupportedError("center degree exceeds the tower budget");
      a = F0->generator();
    }
  }
  Branch b;
  b.F = F0;
  b.H.K = F0;
  for (int j = 0; j <= c.n; ++j) {
    UPoly A = c.coeff_y(j).lift_to(F0);
    std::vector<Value> row;
    if (center.infinite) {
      row.assign(c.m + 1, Value{});
      for (int i = 0; i <= A.degree(); ++i) row[c.m - i] = A.coeffs()[i];
    } else {
      row = A.shift(a).coeffs();
    }
    trim_row(*F0, row);
    b.H.c.push_back(std::move(row));
  }
  Search s{c, center, opt, a, {}};
  s.descend(b, c.n, true);
  std::vector<Place> out;
  int idx = 0;
  for (auto& d : s.out) {
    d->a = d->F->lift(a, F0->depth());
    d->branch = idx++;
    d->key = center.describe() + "#" + std::to_string(d->branch);
    out.emplace_back(d);
  }
  return out;
}

std::vector<Center> centers_of(const UPoly& r, bool with_infinity) {
  std::vector<Center> out;
  if (!r.is_zero() && r.degree() > 0)
    for (const auto& f : irreducible_factors(squarefree_part(r))) out.push_back(Center{false, f});
  if (with_infinity) out.push_back(Center::at_infinity());
  return out;
}

long ramification_sum(const std::vector<Place>& places) {
  if (places.empty()) return 0;
  long s = 0;
  for (const auto& p : places) s += std::labs(p.mu()) * p.weight();
  return s / places.front().center().degree();
}

Laurent evaluate_at(const Place& p, const MPoly& G0, long terms) {
  const FieldPtr& F = p.field();
  MPoly G = G0.with_vars(CurveModel::vars()).lift_to(F);
  const Laurent x = p.x_series();
  const Laurent y = p.y_series(terms);
  auto rows = G.coefficients_in(1);
  Laurent acc(F);
  for (std::size_t j = rows.size(); j-- > 0;) {
    UPoly gx = rows[j].to_upoly(0);
    Laurent gv(F);
    for (int i = gx.degree(); i >= 0; --i) gv = gv * x + Laurent::constant(F, gx.coeffs()[i]);
    acc = acc * y + gv;
  }
  return acc;
}

long ord_at(const CurveModel& c, const Place& p, const MPoly& G0, const PlaceOptions& opt) {
  MPoly G = G0.with_vars(CurveModel::vars());
  if (G.is_zero() || divides(c.P, G)) throw InputError("function vanishes identically on the curve");
  for (long terms = std::max(opt.precision, 1L);; terms *= 2) {
    Laurent s = evaluate_at(p, G, terms);
    if (!s.known_zero()) return s.order();
    if (terms >= opt.ceiling) throw PrecisionError("order not resolved within " + std::to_string(opt.ceiling) + " terms");
  }
}

long ord_at(const CurveModel& c, const Place& p, const Fraction& f, const PlaceOptions& opt) {
  return ord_at(c, p, f.num, opt) - ord_at(c, p, f.den, opt);
}

void Divisor::add(const Place& p, long mult) {
  if (mult == 0) return;
  auto it = e_.find(p.key());
  if (it == e_.end()) {
    e_.emplace(p.key(), Entry{p, mult});
    return;
  }
  it->second.mult += mult;
  if (it->second.mult == 0) e_.erase(it);
}

long Divisor::mult(const std::string& key) const {
  auto it = e_.find(key);
  return it == e_.end() ? 0 : it->second.mult;
}

long Divisor::degree() const {
  long s = 0;
  for (const auto& [k, e] : e_) s += e.mult * e.place.weight();
  return s;
}

long Divisor::delta() const {
  long s = 0;
  for (const auto& [k, e] : e_) s += std::labs(e.mult) * e.place.weight();
  return s;
}

Divisor Divisor::positive() const {
  Divisor r;
  for (const auto& [k, e] : e_)
    if (e.mult > 0) r.add(e.place, e.mult);
  return r;
}

Divisor Divisor::negative() const {
  Divisor r;
  for (const auto& [k, e] : e_)
    if (e.mult < 0) r.add(e.place, -e.mult);
  return r;
}

Divisor Divisor::scaled(long k) const {
  Divisor r;
  for (const auto& [key, e] : e_) r.add(e.place, e.mult * k);
  return r;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor r = a;
  for (const auto& [k, e] : b.e_) r.add(e.place, e.mult);
  return r;
}

std::string Divisor::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : e_) {
    long m = e.mult;
    if (!first) os << (m < 0 ? " - " : " + ");
    else if (m < 0) os << "-";
    first = false;
    os << std::labs(m) << "*[" << k << "]";
  }
  if (first) os << "0";
  return os.str();
}

std::vector<Center> critical_centers(const CurveModel& c, const std::vector<MPoly>& polys) {
  UPoly R = c.coeff_y(c.n);
  for (const auto& G0 : polys) {
    MPoly G = G0.with_vars(CurveModel::vars());
    if (G.is_zero()) throw InputError("zero function");
    UPoly r = G.degree(1) <= 0 ? G.to_upoly(0) : resultant(c.P, G, 1).to_upoly(0);
    if (r.is_zero()) throw InputError("function vanishes identically on the curve");
    R = R * r;
  }
  return centers_of(R, true);
}

Divisor principal_divisor(const CurveModel& c, const Fraction& f, const PlaceOptions& opt) {
  Divisor D;
  for (const auto& center : critical_centers(c, {f.num, f.den}))
    for (const auto& p : places_above(c, center, opt)) D.add(p, ord_at(c, p, f, opt));
  return D;
}

MonomialExpansion expand_monomial(const Place& p, long l, long j, long terms) {
  if (l < 0 || j < 0) throw InputError("monomial exponents must be nonnegative");
  MonomialExpansion me;
  me.l = l;
  me.j = j;
  me.series = pow(p.x_series(), static_cast<unsigned>(l)) * pow(p.y_series(terms), static_cast<unsigned>(j));
  me.leading = me.series.order();
  me.series_offset = j * p.nu() + (p.at_infinity() ? l * p.mu() : 0);
  const long end = me.series.exact() ? me.series.val + static_cast<long>(me.series.c.size()) : me.series.prec;
  for (long e = me.series_offset; e < end; ++e) me.beta.push_back(me.series.coeff(e));
  return me;
}

}  // namespace ffh
