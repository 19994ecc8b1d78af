#include "ffh/core/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "ffh/core/error.hpp"

namespace ffh {

namespace {

using u64 = std::uint64_t;
using PPoly = std::vector<u64>;  // coefficients mod a small prime
using ZPoly = std::vector<Integer>;

// ---- arithmetic modulo a word-sized prime ----

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  PPoly from(const ZPoly& z) const {
    PPoly r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      Integer m;
      mpz_fdiv_r_ui(m.get_mpz_t(), z[i].get_mpz_t(), p);
      r[i] = m.get_ui();
    }
    trim(r);
    return r;
  }

  PPoly sub(const PPoly& a, const PPoly& b) const {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  PPoly mul(const PPoly& a, const PPoly& b) const {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }

  // a mod b, optionally collecting the quotient.
  PPoly rem(PPoly a, const PPoly& b, PPoly* q = nullptr) const {
    const std::size_t db = b.size() - 1;
    const u64 il = inv(b.back());
    if (q) q->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
    while (a.size() >= b.size()) {
      const u64 f = mul(a.back(), il);
      const std::size_t s = a.size() - 1 - db;
      if (q) (*q)[s] = f;
      for (std::size_t i = 0; i <= db; ++i) a[s + i] = sub(a[s + i], mul(f, b[i]));
      trim(a);
    }
    return a;
  }

  PPoly monic(PPoly a) const {
    if (a.empty()) return a;
    const u64 il = inv(a.back());
    for (auto& c : a) c = mul(c, il);
    return a;
  }

  PPoly gcd(PPoly a, PPoly b) const {
    while (!b.empty()) {
      PPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s*a + t*b = gcd (monic)
  PPoly xgcd(PPoly a, PPoly b, PPoly& s, PPoly& t) const {
    PPoly s0{1}, s1, t0, t1{1};
    while (!b.empty()) {
      PPoly q;
      PPoly r = rem(a, b, &q);
      a = std::move(b);
      b = std::move(r);
      PPoly s2 = sub(s0, mul(q, s1));
      PPoly t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const u64 il = inv(a.back());
    for (auto& c : s0) c = mul(c, il);
    for (auto& c : t0) c = mul(c, il);
    s = s0;
    t = t0;
    return monic(a);
  }

  PPoly derivative(const PPoly& a) const {
    PPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], i % p));
    trim(r);
    return r;
  }

  PPoly powmod(PPoly base, Integer e, const PPoly& m) const {
    PPoly r{1};
    base = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base), m);
      e >>= 1;
      if (e > 0) base = rem(mul(base, base), m);
    }
    return r;
  }
};

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<PPoly, int>> ddf(const Fp& F, PPoly f) {
  std::vector<std::pair<PPoly, int>> out;
  const PPoly x{0, 1};
  PPoly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
    PPoly g = F.gcd(f, F.sub(h, x));
    if (g.size() > 1) {
      out.emplace_back(g, d);
      PPoly q;
      F.rem(f, g, &q);
      f = q;
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus); p is odd.
void edf(const Fp& F, const PPoly& f, int d, std::mt19937_64& rng, std::vector<PPoly>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e = ipow(Integer(static_cast<unsigned long>(F.p)), d);
  e = (e - 1) / 2;
  while (true) {
    PPoly a(n, 0);
    for (auto& c : a) c = rng() % F.p;
    Fp::trim(a);
    if (a.size() <= 1) continue;
    PPoly g = F.gcd(f, a);
    if (g.size() > 1 && g.size() < f.size()) {
      PPoly q;
      F.rem(f, g, &q);
      edf(F, g, d, rng, out);
      edf(F, F.monic(q), d, rng, out);
      return;
    }
    PPoly b = F.powmod(a, e, f);
    if (b.empty()) continue;
    b[0] = F.sub(b[0], 1);
    Fp::trim(b);
    g = F.gcd(f, b);
    if (g.size() > 1 && g.size() < f.size()) {
      PPoly q;
      F.rem(f, g, &q);
      edf(F, g, d, rng, out);
      edf(F, F.monic(q), d, rng, out);
      return;
    }
  }
}

// ---- integer polynomials modulo a big modulus ----

struct Zm {
  Integer m;
  void reduce(ZPoly& a) const {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ZPoly add(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    reduce(r);
    return r;
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    reduce(r);
    return r;
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    reduce(r);
    return r;
  }
  // Division by a monic polynomial.
  ZPoly divrem(ZPoly a, const ZPoly& b, ZPoly& q) const {
    const std::size_t db = b.size() - 1;
    q.assign(a.size() >= b.size() ? a.size() - db : 0, Integer(0));
    while (a.size() >= b.size()) {
      Integer f = a.back();
      const std::size_t s = a.size() - 1 - db;
      q[s] = f;
      for (std::size_t i = 0; i <= db; ++i) a[s + i] -= f * b[i];
      reduce(a);
    }
    reduce(q);
    return a;
  }
};

ZPoly lift_ppoly(const PPoly& a) {
  ZPoly r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
void hensel_step(const Zm& M, const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t) {
  ZPoly e = M.sub(f, M.mul(g, h));
  ZPoly q;
  ZPoly r = M.divrem(M.mul(s, e), h, q);
  ZPoly g2 = M.add(g, M.add(M.mul(t, e), M.mul(q, g)));
  ZPoly h2 = M.add(h, r);
  ZPoly b = M.sub(M.add(M.mul(s, g2), M.mul(t, h2)), ZPoly{Integer(1)});
  ZPoly c;
  ZPoly d = M.divrem(M.mul(s, b), h2, c);
  s = M.sub(s, d);
  t = M.sub(t, M.add(M.mul(t, b), M.mul(c, g2)));
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f = lc * prod(factors) from mod p to mod p^(2^k) >= bound.
// Returns monic lifted factors modulo the final modulus.
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<PPoly>& factors, u64 p,
                                    const Integer& bound, Integer& modulus) {
  const Fp F{p};
  int steps = 0;
  Integer pk = static_cast<unsigned long>(p);
  while (pk <= bound) {
    pk *= pk;
    ++steps;
  }
  modulus = pk;
  if (factors.size() == 1) {
    // Single factor: the monic associate of f modulo p^k.
    Zm M{pk};
    Integer il;
    mpz_invert(il.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
    ZPoly r = f;
    for (auto& c : r) c *= il;
    M.reduce(r);
    return {r};
  }
  // Split off the first factor, recurse on the rest.
  const std::size_t k = factors.size() / 2;
  PPoly a{1}, b{1};
  for (std::size_t i = 0; i < k; ++i) a = F.mul(a, factors[i]);
  for (std::size_t i = k; i < factors.size(); ++i) b = F.mul(b, factors[i]);
  // g carries the leading coefficient, h is monic.
  PPoly s, t;
  F.xgcd(b, a, s, t);  // s*b + t*a = 1 ; with g = a*lc, h = b
  u64 lcp = F.from(ZPoly{f.back()})[0];
  PPoly ga = a;
  for (auto& c : ga) c = F.mul(c, lcp);
  // s*g + t*h = 1 needs scaling by lc^{-1} on the g-side coefficient.
  PPoly sg = s;  // coefficient of h
  PPoly tg = t;  // coefficient of a; for g = lc*a use t/lc
  u64 il = F.inv(lcp);
  for (auto& c : tg) c = F.mul(c, il);
  ZPoly g = lift_ppoly(ga), h = lift_ppoly(b), S = lift_ppoly(tg), T = lift_ppoly(sg);
  Integer m = static_cast<unsigned long>(p);
  for (int i = 0; i < steps; ++i) {
    m *= m;
    Zm M{m};
    hensel_step(M, f, g, h, S, T);
  }
  // Now f = g*h mod p^k. Recurse on both halves.
  std::vector<PPoly> fa(factors.begin(), factors.begin() + k), fb(factors.begin() + k, factors.end());
  Integer m1, m2;
  auto la = multifactor_lift(g, fa, p, bound, m1);
  auto lb = multifactor_lift(h, fb, p, bound, m2);
  la.insert(la.end(), lb.begin(), lb.end());
  return la;
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> ps;
    for (u64 n = 5; ps.size() < 200; n += 2) {
      bool prime = true;
      for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) {
          prime = false;
          break;
        }
      if (prime) ps.push_back(n);
    }
    return ps;
  }();
  return primes;
}

Integer maxabs(const ZPoly& f) {
  Integer m = 0;
  for (const auto& c : f) m = std::max(m, Integer(abs(c)));
  return m;
}

// Symmetric representative in (-m/2, m/2].
void symmetric(ZPoly& a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact division over Z; returns false when b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (b.size() > a.size()) return false;
  if (a[0] != 0 && b[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return false;
  ZPoly r = a;
  q.assign(a.size() - b.size() + 1, Integer(0));
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer f = r[i] / b.back();
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  return true;
}

ZPoly zprimitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// Factors a primitive squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  const int n = static_cast<int>(f.size()) - 1;
  // Pick the good prime giving the fewest modular factors.
  u64 best_p = 0;
  std::vector<std::pair<PPoly, int>> best_ddf;
  std::size_t best_count = 0;
  int good = 0;
  for (u64 p : small_primes()) {
    Fp F{p};
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    PPoly fp = F.from(f);
    if (F.gcd(fp, F.derivative(fp)).size() > 1) continue;
    auto dd = ddf(F, F.monic(fp));
    std::size_t count = 0;
    for (const auto& [g, d] : dd) count += (g.size() - 1) / d;
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_ddf = dd;
      best_count = count;
    }
    if (count == 1 || ++good >= 6) break;
  }
  if (best_p == 0) throw UnsupportedError("no good prime found for factorization");
  if (best_count == 1) return {f};
  Fp F{best_p};
  std::mt19937_64 rng(0x5eed);
  std::vector<PPoly> modular;
  for (const auto& [g, d] : best_ddf) edf(F, g, d, rng, modular);
  std::sort(modular.begin(), modular.end());

  Integer lc = f.back();
  Integer bound = ipow(Integer(2), n) * (n + 1) * maxabs(f) * abs(lc) * 2;
  Integer modulus;
  std::vector<ZPoly> lifted = multifactor_lift(f, modular, best_p, bound, modulus);

  std::vector<ZPoly> result;
  std::size_t subset = 1;
  while (2 * subset <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(subset);
    for (std::size_t i = 0; i < subset; ++i) idx[i] = i;
    while (true) {
      Zm M{modulus};
      ZPoly g{f.back()};
      for (std::size_t i : idx) g = M.mul(g, lifted[i]);
      symmetric(g, modulus);
      if (!g.empty()) {
        g = zprimitive(g);
        ZPoly q;
        if (zdivides(f, g, q)) {
          result.push_back(g);
          f = q;
          std::vector<ZPoly> rest;
          for (std::size_t i = 0, j = 0; i < r; ++i) {
            if (j < subset && idx[j] == i) {
              ++j;
              continue;
            }
            rest.push_back(lifted[i]);
          }
          lifted = std::move(rest);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t i = subset;
      while (i > 0 && idx[i - 1] == r - subset + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < subset; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++subset;
  }
  if (f.size() > 1) result.push_back(zprimitive(f));
  return result;
}

}  // namespace

QFactorization factor_univariate_Q(const QPoly& p, int degree_cap) {
  if (p.is_zero()) throw InputError("factorization of the zero polynomial");
  if (p.degree() > degree_cap) throw UnsupportedError("degree exceeds the factorization cap");
  QFactorization out;
  out.unit = p.lead();
  for (const auto& [f, m] : squarefree_decomposition(p))
    for (const auto& g : irreducible_factors(f, degree_cap)) out.factors.emplace_back(g, m);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

std::vector<QPoly> irreducible_factors(const QPoly& p, int degree_cap) {
  if (p.is_zero()) throw InputError("factorization of the zero polynomial");
  if (p.degree() > degree_cap) throw UnsupportedError("degree exceeds the factorization cap");
  std::vector<QPoly> out;
  if (p.degree() <= 0) return out;
  QPoly f = p;
  int v = f.low_order();
  if (v > 0) {
    out.push_back(QPoly::variable());
    f = divexact(f, QPoly::monomial(1, v));
  }
  if (f.degree() == 1) {
    out.push_back(f.monic());
  } else if (f.degree() > 1) {
    std::vector<Integer> z;
    primitive_integer(f, z);
    for (const auto& g : zassenhaus(z)) out.push_back(from_integers(g).monic());
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_irreducible_Q(const QPoly& p) {
  if (p.degree() <= 0) return false;
  if (p.degree() == 1) return true;
  if (squarefree_part(p).degree() != p.degree()) return false;
  return irreducible_factors(p).size() == 1;
}

}  // namespace ffh
