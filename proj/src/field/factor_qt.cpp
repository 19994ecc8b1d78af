// Factorization of squarefree polynomials over Q(t), viewed as bivariate
// polynomials over Q: specialize t, factor over Q, lift t-adically and
// recombine by trial division.

#include <algorithm>

#include "ffh/core/error.hpp"
#include "ffh/core/factor.hpp"
#include "ffh/field/tower.hpp"
#include "factor_internal.hpp"

namespace ffh::detail {

namespace {

using Bi = std::vector<QPoly>;   // entry i: coefficient of Y^i in Q[s]
using Ser = std::vector<QPoly>;  // entry j: coefficient of s^j in Q[Y]

void trim(Bi& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Truncated product of two s-series with Q[Y] coefficients.
Ser series_mul(const Ser& a, const Ser& b, std::size_t k) {
  Ser r(k);
  for (std::size_t i = 0; i < a.size() && i < k; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < k; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Converts between the two layouts.
Ser to_series(const Bi& f, std::size_t k) {
  Ser r(k);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (int j = 0; j <= f[i].degree() && j < static_cast<int>(k); ++j)
      if (f[i].coeff(j) != 0) r[j] += QPoly::monomial(f[i].coeff(j), static_cast<int>(i));
  return r;
}

Bi to_bi(const Ser& s) {
  int n = -1;
  for (const auto& c : s) n = std::max(n, c.degree());
  Bi r(n + 1);
  for (std::size_t j = 0; j < s.size(); ++j)
    for (int i = 0; i <= s[j].degree(); ++i)
      if (s[j].coeff(i) != 0) r[i] += QPoly::monomial(s[j].coeff(i), static_cast<int>(j));
  trim(r);
  return r;
}

QPoly content(const Bi& f) {
  QPoly g;
  for (const auto& c : f) g = gcd(g, c);
  return g;
}

Bi primitive(Bi f) {
  QPoly g = content(f);
  if (!g.is_one())
    for (auto& c : f) c = divexact(c, g);
  return f;
}

// Exact division in Q[s][Y]; false when b does not divide a.
bool bi_divides(const Bi& b, Bi a, Bi& q) {
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return false;
  q.assign(a.size() - db, QPoly());
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int s = static_cast<int>(a.size()) - 1 - db;
    auto [c, r] = divrem(a.back(), b.back());
    if (!r.is_zero()) return false;
    q[s] = c;
    for (int i = 0; i <= db; ++i) a[s + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return a.empty();
}

// Power series inverse of a polynomial with nonzero constant term, mod s^k.
QPoly series_inverse(const QPoly& a, std::size_t k) {
  std::vector<Rational> r(k);
  const Rational a0inv = 1 / a.coeff(0);
  for (std::size_t n = 0; n < k; ++n) {
    Rational acc = n == 0 ? Rational(1) : Rational(0);
    for (std::size_t i = 1; i <= n; ++i) acc -= a.coeff(static_cast<int>(i)) * r[n - i];
    r[n] = acc * a0inv;
  }
  return QPoly(r);
}

QPoly truncate(const QPoly& a, std::size_t k) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().begin() + std::min(a.coeffs().size(), k));
  return QPoly(c);
}

QPoly eval_y(const Bi& f, const Rational& t0) {
  std::vector<Rational> c;
  for (const auto& x : f) c.push_back(x.eval(t0));
  return QPoly(c);
}

std::vector<Bi> factor_bi(const Bi& F) {
  const int n = static_cast<int>(F.size()) - 1;
  if (n <= 1) return {F};
  bool constant = std::all_of(F.begin(), F.end(), [](const QPoly& c) { return c.is_constant(); });
  if (constant) {
    std::vector<Rational> c;
    for (const auto& x : F) c.push_back(x.coeff(0));
    std::vector<Bi> out;
    for (const auto& g : irreducible_factors(QPoly(c))) {
      Bi b;
      for (const auto& x : g.coeffs()) b.emplace_back(x);
      out.push_back(b);
    }
    return out;
  }
  // Specialization point giving the fewest factors.
  Rational best_t0;
  std::vector<QPoly> best;
  int tried = 0;
  for (long k = 0; k < 200 && tried < 4; ++k) {
    const Rational t0 = (k % 2 ? 1 : -1) * ((k + 1) / 2);
    if (F.back().eval(t0) == 0) continue;
    QPoly u = eval_y(F, t0);
    if (gcd(u, u.derivative()).degree() > 0) continue;
    auto fs = irreducible_factors(u);
    if (best.empty() || fs.size() < best.size()) {
      best = fs;
      best_t0 = t0;
    }
    ++tried;
    if (fs.size() == 1) break;
  }
  if (best.empty()) throw UnsupportedError("no good specialization point for bivariate factorization");
  if (best.size() == 1) return {F};

  const Rational t0 = best_t0;
  Bi G;
  for (const auto& c : F) G.push_back(c.shifted(t0));
  int sdeg = 0;
  for (const auto& c : G) sdeg = std::max(sdeg, c.degree());
  const std::size_t k = static_cast<std::size_t>(sdeg + G.back().degree() + 1);

  // Monic associate as an s-series.
  QPoly lcinv = series_inverse(G.back(), k);
  Bi Gm;
  for (const auto& c : G) Gm.push_back(truncate(c * lcinv, k));
  Ser target = to_series(Gm, k);

  const std::size_t r = best.size();
  std::vector<QPoly> sigma(r);
  for (std::size_t i = 0; i < r; ++i) {
    QPoly others(1);
    for (std::size_t l = 0; l < r; ++l)
      if (l != i) others *= best[l];
    QPoly a, b;
    xgcd(others, best[i], a, b);
    sigma[i] = divrem(a, best[i]).second;
  }
  std::vector<Ser> g(r, Ser(k));
  for (std::size_t i = 0; i < r; ++i) g[i][0] = best[i];
  for (std::size_t j = 1; j < k; ++j) {
    Ser prod = g[0];
    for (std::size_t i = 1; i < r; ++i) prod = series_mul(prod, g[i], j + 1);
    QPoly e = target[j] - prod[j];
    if (e.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) g[i][j] = divrem(e * sigma[i], best[i]).second;
  }

  // Recombination.
  std::vector<Bi> found;
  std::vector<std::size_t> alive(r);
  for (std::size_t i = 0; i < r; ++i) alive[i] = i;
  std::size_t size = 1;
  while (2 * size <= alive.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      Ser cand(k);
      cand[0] = QPoly(1);
      for (std::size_t i : idx) cand = series_mul(cand, g[alive[i]], k);
      Ser lcs(k);
      for (int j = 0; j <= G.back().degree() && j < static_cast<int>(k); ++j) lcs[j] = QPoly(G.back().coeff(j));
      cand = series_mul(cand, lcs, k);
      Bi h = primitive(to_bi(cand));
      Bi q;
      if (h.size() > 1 && bi_divides(h, G, q)) {
        found.push_back(h);
        G = q;
        std::vector<std::size_t> rest;
        for (std::size_t i = 0, j = 0; i < alive.size(); ++i) {
          if (j < size && idx[j] == i) {
            ++j;
            continue;
          }
          rest.push_back(alive[i]);
        }
        alive = std::move(rest);
        hit = true;
        break;
      }
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == alive.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++size;
  }
  if (G.size() > 1) found.push_back(primitive(G));
  for (auto& f : found)
    for (auto& c : f) c = c.shifted(-t0);
  return found;
}

}  // namespace

std::vector<UPoly> factor_squarefree_qt(const UPoly& p) {
  const FieldPtr& K = p.field();
  Bi F;
  for (const auto& c : clear_to_primitive(p)) F.push_back(c);
  std::vector<UPoly> out;
  for (const auto& f : factor_bi(F)) {
    std::vector<Value> c;
    for (const auto& x : f) c.push_back(K->from_ratfunc(RatFunc(x)));
    out.push_back(UPoly(K, std::move(c)).monic());
  }
  return out;
}

}  // namespace ffh::detail
