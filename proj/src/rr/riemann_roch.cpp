#include "ffh/rr/riemann_roch.hpp"

#include <algorithm>
#include <map>

#include "ffh/core/linalg.hpp"
#include "ffh/field/tower.hpp"
#include "ffh/heights/height.hpp"

namespace ffh {

namespace {

const std::vector<std::string> kXYZ = {"X", "Y", "Z"};

Laurent upoly_at(const UPoly& f, const Laurent& x) {
  const FieldPtr& F = x.K;
  UPoly g = f.lift_to(F);
  Laurent acc(F);
  for (int i = g.degree(); i >= 0; --i) acc = acc * x + Laurent::constant(F, g.coeffs()[i]);
  return acc;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Per-place data reused across candidate systems.
struct PlaceData {
  Place p;
  long weight = 1;
  bool pole = false;  // pole of x or y
  long ox = 0, oy = 0;
  long d = 0;              // multiplicity in D
  std::vector<long> ordf;  // order of f_i(x) for each factor of q_D
  Laurent x;
  long terms = 0;
  std::vector<Laurent> xpow, ypow;

  void ensure(long N, int n, long t) {
    while (static_cast<long>(xpow.size()) < N)
      xpow.push_back(xpow.empty() ? Laurent::constant(x.K, x.K->one()) : xpow.back() * x);
    if (t > terms) {
      terms = t;
      Laurent y = p.y_series(t);
      ypow.assign(1, Laurent::constant(x.K, x.K->one()));
      for (int j = 1; j < n; ++j) ypow.push_back(ypow.back() * y);
    }
  }
};

std::vector<std::vector<long>> candidates(const std::vector<std::pair<UPoly, long>>& fac, long limit) {
  // Exponent vectors with sum k_i deg f_i < limit, graded by degree, then lex.
  std::vector<std::pair<long, std::vector<long>>> all;
  std::vector<long> k(fac.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, long deg) -> void {
    if (i == fac.size()) {
      all.emplace_back(deg, k);
      return;
    }
    const long di = fac[i].first.degree();
    for (long e = 0; e <= fac[i].second && deg + e * di < limit; ++e) {
      k[i] = e;
      self(self, i + 1, deg + e * di);
    }
    k[i] = 0;
  };
  rec(rec, 0, 0);
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<std::vector<long>> out;
  for (auto& [d, v] : all) out.push_back(std::move(v));
  return out;
}

std::string check_status(bool applicable, bool ok) { return !applicable ? "not-applicable" : ok ? "satisfied" : "violated"; }

// lead^s v^j modulo P, where lead is the leading coefficient of P in v.
class Reducer {
 public:
  Reducer(const MPoly& P, int v) : v_(v) {
    auto cs = P.coefficients_in(v);
    n_ = static_cast<int>(cs.size()) - 1;
    lead_ = cs.back();
    cs.pop_back();
    rest_ = std::move(cs);
  }
  int n() const { return n_; }

  MPoly W(int j, int s) {
    auto key = std::make_pair(j, s);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    MPoly r;
    if (j < n_) {
      r = lead_.pow(static_cast<unsigned>(s)) * MPoly::variable(lead_.field(), lead_.vars(), lead_.vars()[v_]).pow(j);
    } else {
      if (s < 1) throw Error("reduction multiplier too small");
      r = MPoly(lead_.field(), lead_.vars());
      for (int i = 0; i < n_; ++i)
        if (!rest_[i].is_zero()) r = r - rest_[i] * W(i + j - n_, s - 1);
    }
    memo_.emplace(key, r);
    return r;
  }

  MPoly reduce(const MPoly& H, int s) {
    auto cs = H.coefficients_in(v_);
    MPoly r(lead_.field(), lead_.vars());
    for (int j = 0; j < static_cast<int>(cs.size()); ++j)
      if (!cs[j].is_zero()) r = r + cs[j] * W(j, s);
    return r;
  }

 private:
  int v_, n_;
  MPoly lead_;
  std::vector<MPoly> rest_;
  std::map<std::pair<int, int>, MPoly> memo_;
};

}  // namespace

const char* to_string(RRMode m) { return m == RRMode::Faithful ? "faithful" : "fallback"; }

Rational root_height(const UPoly& f) {
  if (!f.field()->has_t() || f.degree() < 1) return Rational(0);
  int dt = 0;
  for (const auto& c : clear_to_primitive(f)) dt = std::max(dt, c.degree());
  Rational h(dt, f.degree());
  h.canonicalize();
  return h;
}

UPoly DivisorContext::qD_poly() const {
  UPoly q = UPoly::constant(curve.K, curve.K->one());
  for (const auto& [f, e] : qD) q = q * f.pow(static_cast<unsigned>(e));
  return q;
}

long DivisorContext::qD_degree() const {
  long s = 0;
  for (const auto& [f, e] : qD) s += f.degree() * e;
  return s;
}

bool DivisorContext::in_U(const std::string& key) const {
  return std::any_of(U.begin(), U.end(), [&](const Place& p) { return p.key() == key; });
}

DivisorContext divisor_context(const CurveModel& c, const Divisor& D, const PlaceOptions& opt) {
  if (D.is_zero()) throw InputError("zero divisor");
  if (!c.K->is_base()) throw UnsupportedError("Riemann-Roch construction needs a curve over Q or Q(t)");
  DivisorContext ctx;
  ctx.curve = c;
  ctx.D = D;
  ctx.delta = D.delta();
  ctx.rho = c.rho;
  ctx.exponent = static_cast<long>(c.rho) * (c.rho + ctx.delta);
  ctx.opt = opt;
  const long E = ctx.exponent;

  auto addf = [&](const UPoly& f, long e) {
    for (auto& [g, k] : ctx.qD)
      if (g == f) {
        k += e;
        return;
      }
    ctx.qD.emplace_back(f, e);
  };
  if (c.d.degree() > 0)
    for (const auto& [f, mult] : factor(c.d).factors) addf(f, mult * E);
  for (const auto& [k, e] : D.entries()) {
    if (e.place.at_infinity()) continue;
    addf(e.place.center().poly, e.place.weight() / e.place.center().degree() * E);
  }
  std::sort(ctx.qD.begin(), ctx.qD.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.to_string("X") < b.first.to_string("X");
  });

  std::map<std::string, Place> U;
  auto add_all = [&](const Center& ce) {
    for (const auto& p : places_above(c, ce, opt)) U.emplace(p.key(), p);
  };
  add_all(Center::at_infinity());
  for (const auto& [f, e] : ctx.qD) add_all(Center{false, f});
  const UPoly A0 = c.coeff_y(c.n);
  const MPoly Y = MPoly::variable(c.K, CurveModel::vars(), "Y");
  for (const auto& ce : centers_of(A0, false))
    for (const auto& p : places_above(c, ce, opt))
      if (ord_at(c, p, Y, opt) < 0) U.emplace(p.key(), p);
  for (const auto& [k, e] : D.entries()) U.emplace(k, e.place);
  for (auto& [k, p] : U) ctx.U.push_back(p);

  ctx.hP = height_polynomial(c.P);
  ctx.hD = ctx.hP;
  for (const auto& p : ctx.U)
    if (!p.at_infinity()) ctx.hD = std::max(ctx.hD, root_height(p.center().poly));
  return ctx;
}

Fraction RRElement::z() const {
  return Fraction{g, MPoly::from_upoly(q, CurveModel::vars(), 0)};
}

LogConstant rr_height_constant(const DivisorContext& ctx, long shift) {
  const long rd = ctx.rho + ctx.delta;
  LogConstant L;
  L.coeff = Rational(1600) * Rational(ipow(rd, 6));
  L.base = ctx.rho + 1;
  L.exponent = Rational(5 * rd * rd * rd + shift);
  L.scale = ctx.hD;
  return L;
}

RRElement rr_element(const DivisorContext& ctx, const RROptions& ro) {
  const CurveModel& c = ctx.curve;
  const FieldPtr& K = c.K;
  if (ctx.D.degree() < 0) throw NoSolutionError("deg(D) < 0, so L(D) = 0");
  const bool faithful = ro.mode == RRMode::Faithful;
  const int n = c.n;

  std::vector<PlaceData> pd;
  const MPoly Y = MPoly::variable(K, CurveModel::vars(), "Y");
  for (const auto& p : ctx.U) {
    PlaceData d;
    d.p = p;
    d.weight = p.weight();
    d.x = p.x_series();
    d.ox = d.x.order();
    d.oy = ord_at(c, p, Y, ctx.opt);
    d.pole = d.ox < 0 || d.oy < 0;
    d.d = ctx.D.mult(p.key());
    for (const auto& [f, e] : ctx.qD) d.ordf.push_back(upoly_at(f, d.x).order());
    pd.push_back(std::move(d));
  }

  std::vector<std::vector<long>> cands;
  if (faithful) {
    cands = candidates(ctx.qD, ctx.exponent);
  } else {
    std::vector<long> all;
    for (const auto& [f, e] : ctx.qD) all.push_back(e);
    cands.push_back(all);
  }
  const long ansatz_cap = 4 * static_cast<long>(ctx.rho) * (ctx.rho + ctx.delta);
  const long Nmax = faithful ? ansatz_cap : ansatz_cap + ctx.qD_degree();

  std::vector<long> schedule;
  for (long N = 1; N < Nmax; N *= 2) schedule.push_back(N);
  schedule.push_back(Nmax);

  for (long N : schedule) {
    const int cols = static_cast<int>(N * n);
    for (const auto& k : cands) {
      // Divisor D~ = D - divs(q(x)) on U, plus the quick degree test.
      std::vector<long> m(pd.size()), o(pd.size());
      long degpp = 0;
      for (std::size_t i = 0; i < pd.size(); ++i) {
        long oq = 0;
        for (std::size_t f = 0; f < k.size(); ++f) oq += k[f] * pd[i].ordf[f];
        m[i] = pd[i].d - oq;
        o[i] = (pd[i].ox < 0 ? (N - 1) * pd[i].ox : 0) + (pd[i].oy < 0 ? (n - 1) * pd[i].oy : 0);
        degpp += pd[i].weight * (pd[i].pole ? std::min(m[i], -o[i]) : std::min(m[i], 0L));
      }
      if (degpp < 0) continue;
      if (cols > ro.max_unknowns)
        throw UnsupportedError("Riemann-Roch system with " + std::to_string(cols) + " unknowns exceeds the size limit");

      Matrix A;
      for (std::size_t i = 0; i < pd.size(); ++i) {
        const long hi = -m[i] - 1;
        if (hi < o[i]) continue;
        PlaceData& P = pd[i];
        const FieldPtr& F = P.x.K;
        P.ensure(N, n, hi + 1 - o[i] + ro.extra_terms + 1);
        std::vector<std::vector<Value>> rows(hi - o[i] + 1, std::vector<Value>(cols, F->zero()));
        for (long l = 0; l < N; ++l)
          for (int j = 0; j < n; ++j) {
            Laurent s = P.xpow[l] * P.ypow[j].truncated(hi + 1 - l * P.ox);
            if (s.prec <= hi) throw PrecisionError("expansion too short for the linear system");
            for (long e = o[i]; e <= hi; ++e) rows[e - o[i]][l * n + j] = s.coeff(e);
          }
        const int td = F->total_degree();
        for (const auto& row : rows) {
          std::vector<std::vector<RatFunc>> co;
          for (const auto& v : row) co.push_back(F->coordinates(v));
          for (int r = 0; r < td; ++r) {
            std::vector<Value> kr(cols);
            bool nz = false;
            for (int col = 0; col < cols; ++col) {
              kr[col] = K->from_ratfunc(co[col][r]);
              nz = nz || !co[col][r].is_zero();
            }
            if (nz) A.push_back(std::move(kr));
          }
        }
      }
      auto ker = kernel_basis(*K, A, cols);
      if (ker.empty()) continue;

      RRElement out;
      out.mode = ro.mode;
      out.q_exponents = k;
      out.q = UPoly::constant(K, K->one());
      for (std::size_t f = 0; f < k.size(); ++f) out.q = out.q * ctx.qD[f].first.pow(static_cast<unsigned>(k[f]));
      out.ansatz = N;
      out.unknowns = cols;
      out.equations = static_cast<int>(A.size());
      out.rank = rref(*K, A, cols).rank();
      const auto& sol = ker.front();
      out.a.assign(N, std::vector<Value>(n));
      out.g = MPoly(K, CurveModel::vars());
      std::vector<RatFunc> coords;
      for (long l = 0; l < N; ++l)
        for (int j = 0; j < n; ++j) {
          out.a[l][j] = sol[l * n + j];
          if (!K->is_zero(sol[l * n + j])) out.g.add_term({static_cast<int>(l), j}, sol[l * n + j]);
          RatFunc r;
          K->in_base(sol[l * n + j], &r);
          coords.push_back(r);
        }
      out.height_a = height_point(coords);
      out.kappa = 0;
      for (const auto& row : A)
        for (const auto& v : row) {
          RatFunc r;
          K->in_base(v, &r);
          out.kappa = std::max(out.kappa, height_ratfunc(r));
        }

      const Rational r = out.rank;
      out.checks.push_back({"denominator-degree", "< " + std::to_string(ctx.exponent), Rational(out.q.degree()),
                            check_status(faithful, out.q.degree() < ctx.exponent)});
      out.checks.push_back({"ansatz-degree", "< " + std::to_string(ansatz_cap), Rational(N - 1),
                            check_status(faithful, N - 1 < ansatz_cap)});
      const Rational cramer = r * r * (r + 1) * out.kappa;
      out.checks.push_back({"cramer-height", cramer.get_str(), out.height_a, check_status(true, out.height_a <= cramer)});
      const LogConstant L = rr_height_constant(ctx, -11);
      out.checks.push_back({"solution-height", L.to_string(), out.height_a, check_status(faithful, leq(out.height_a, L))});

      const auto cert = verify_membership(c, ctx.D, out.z(), ctx.U, ctx.opt);
      if (!cert.member) throw Error("constructed element failed the membership check");
      return out;
    }
  }
  throw NoSolutionError("the linear system has only the zero solution for every candidate denominator");
}

MembershipCertificate verify_membership(const CurveModel& c, const Divisor& D, const Fraction& z,
                                        const std::vector<Place>& extra, const PlaceOptions& opt) {
  const MPoly num = z.num.with_vars(CurveModel::vars());
  if (num.is_zero() || divides(c.P, num)) throw InputError("z must be nonzero");
  Divisor dz = principal_divisor(c, z, opt);
  std::map<std::string, bool> keys;
  for (const auto& [k, e] : dz.entries()) keys[k] = true;
  for (const auto& [k, e] : D.entries()) keys[k] = true;
  for (const auto& p : extra) keys[p.key()] = true;
  MembershipCertificate cert;
  for (const auto& [k, unused] : keys) {
    MembershipEntry e;
    e.key = k;
    e.ord = dz.mult(k);
    e.mult = D.mult(k);
    e.ok = e.ord + e.mult >= 0;
    cert.member = cert.member && e.ok;
    cert.entries.push_back(e);
  }
  cert.structural =
      "zeros and poles of z lie at infinity or above roots of A_0(X) Res_Y(P, num) Res_Y(P, den); "
      "every place there is listed";
  return cert;
}

MinimalPolynomialResult minimal_polynomial(const CurveModel& c, const Fraction& z, Against against) {
  const FieldPtr& K = c.K;
  const int elim = against == Against::X ? 1 : 0;
  const int keep = 1 - elim;
  const MPoly num = z.num.with_vars(CurveModel::vars());
  const MPoly den = z.den.with_vars(CurveModel::vars());
  if (den.is_zero() || divides(c.P, den)) throw InputError("denominator vanishes on the curve");
  if (num.is_zero() || divides(c.P, num)) throw InputError("z must be nonzero");

  MinimalPolynomialResult out;
  const MPoly P3 = c.P.with_vars(kXYZ);
  const MPoly G = den.with_vars(kXYZ) * MPoly::variable(K, kXYZ, "Z") - num.with_vars(kXYZ);
  const int dmax = c.P.degree(elim);
  if (G.degree(elim) <= 0) {
    out.resultant = G.pow(static_cast<unsigned>(dmax));
  } else {
    out.resultant = resultant(P3, G, elim);
  }
  const MPoly& R = out.resultant;

  // Lower bound for the Z-degree from a specialization of the kept variable.
  int d0 = 1;
  const int dz = R.degree(2);
  for (int v = 0; v < 16; ++v) {
    MPoly s = R.eval(keep, K->from_rational(v)).eval(elim, K->zero());
    if (s.degree(2) != dz) continue;
    d0 = std::max(1, squarefree_part(s.to_upoly(2)).degree());
    break;
  }

  const std::string kv = CurveModel::vars()[keep];
  const std::vector<std::string> qvars = {kv, "Z"};
  Reducer red(c.P, elim);
  const int ebound = std::max(0, R.degree(keep));
  for (int d = d0; d <= dmax; ++d) {
    if (dmax % d != 0) continue;
    std::vector<MPoly> H(d + 1);
    int s = 0;
    for (int k = 0; k <= d; ++k) {
      H[k] = num.pow(k) * den.pow(d - k);
      s = std::max(s, H[k].degree(elim) - red.n() + 1);
    }
    std::vector<MPoly> T(d + 1);
    for (int k = 0; k <= d; ++k) T[k] = red.reduce(H[k], s);
    for (int e = 0; e <= ebound; ++e) {
      const int cols = (d + 1) * (e + 1);
      std::map<Exponents, std::vector<Value>, GradedLexGreater> rows;
      for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= e; ++i)
          for (const auto& [ex, v] : T[k].terms()) {
            Exponents x = ex;
            x[keep] += i;
            auto it = rows.find(x);
            if (it == rows.end()) it = rows.emplace(x, std::vector<Value>(cols, K->zero())).first;
            it->second[k * (e + 1) + i] = v;
          }
      Matrix A;
      for (auto& [ex, row] : rows) A.push_back(std::move(row));
      auto ker = kernel_basis(*K, A, cols);
      if (ker.empty()) continue;
      const auto& b = ker.front();
      MPoly Q(K, qvars);
      MPoly Hs(K, CurveModel::vars());
      const MPoly kvar = MPoly::variable(K, CurveModel::vars(), kv);
      for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= e; ++i) {
          const Value& v = b[k * (e + 1) + i];
          if (K->is_zero(v)) continue;
          Q.add_term({i, k}, v);
          Hs = Hs + (kvar.pow(i) * H[k]).scale(v);
        }
      Q = Q.scale(K->inv(Q.lead_coeff()));
      out.Q = Q;
      out.annihilates = divides(c.P, Hs);
      out.divides_resultant = divides(Q.with_vars(kXYZ), R);
      out.heights_computable = true;
      out.height = height_polynomial(Q);
      return out;
    }
  }
  throw Error("no annihilating polynomial found within the resultant degree");
}

BoundCheck minimal_polynomial_bound(const DivisorContext& ctx, const MinimalPolynomialResult& r) {
  const LogConstant L = rr_height_constant(ctx, -9);
  return {"minimal-polynomial-height", L.to_string(), r.height,
          r.heights_computable ? check_status(true, leq(r.height, L)) : "not-computable"};
}

}  // namespace ffh
