#include "ffh/core/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "ffh/core/error.hpp"

namespace ffh {

namespace {

using ZVec = std::vector<Integer>;

void ztrim(ZVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer zcontent(const ZVec& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zmake_primitive(ZVec& a) {
  if (a.empty()) return;
  Integer g = zcontent(a);
  if (a.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b over Z.
ZVec zprem(ZVec a, const ZVec& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Integer& lb = b.back();
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    ztrim(a);
    // Keep coefficient growth in check.
    if (!a.empty()) {
      Integer g = zcontent(a);
      if (g > 1)
        for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }
  return a;
}

}  // namespace

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

QPoly QPoly::monomial(const Rational& c, int degree) {
  QPoly p;
  if (c == 0) return p;
  p.c_.assign(degree + 1, Rational(0));
  p.c_[degree] = c;
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly r = *this;
  Rational inv = 1 / lead();
  for (auto& c : r.c_) c *= inv;
  return r;
}

QPoly QPoly::derivative() const {
  QPoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
  r.trim();
  return r;
}

Rational QPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

QPoly QPoly::shifted(const Rational& shift) const {
  // Horner: p(x + s) = (...(c_n (x+s) + c_{n-1})(x+s) ...)
  QPoly r;
  QPoly lin(std::vector<Rational>{shift, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * lin;
    r += QPoly(*it);
  }
  return r;
}

QPoly QPoly::inflate(int k) const {
  if (is_zero() || k == 1) return *this;
  std::vector<Rational> c((c_.size() - 1) * k + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::pow(unsigned e) const {
  QPoly r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

int QPoly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_short(a);
      continue;
    }
    if (a != 1) os << to_short(a) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
  const int db = b.degree();
  Rational inv = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly divexact(const QPoly& a, const QPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InputError("inexact polynomial division");
  return q;
}

Rational primitive_integer(const QPoly& p, std::vector<Integer>& primitive) {
  primitive.clear();
  if (p.is_zero()) return Rational(0);
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  primitive.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) primitive.push_back(c.get_num() * (den / c.get_den()));
  Integer g = zcontent(primitive);
  if (primitive.back() < 0) g = -g;
  for (auto& c : primitive) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  Rational content(g, den);
  content.canonicalize();
  return content;
}

QPoly from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> r;
  r.reserve(c.size());
  for (const auto& x : c) r.emplace_back(x);
  return QPoly(std::move(r));
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return QPoly(1);
  ZVec A, B;
  primitive_integer(a, A);
  primitive_integer(b, B);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    ZVec R = zprem(A, B);
    zmake_primitive(R);
    A = std::move(B);
    B = std::move(R);
    if (B.size() == 1) return QPoly(1);
  }
  return from_integers(A).monic();
}

QPoly lcm(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  return divexact(a * b, gcd(a, b)).monic();
}

QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = QPoly();
    t = QPoly();
    return r0;
  }
  Rational inv = 1 / r0.lead();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : QPoly(1);
  return divexact(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() <= 0) return out;
  QPoly f = p.monic();
  QPoly fp = f.derivative();
  QPoly a = gcd(f, fp);
  QPoly b = divexact(f, a);
  QPoly c = divexact(fp, a);
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divexact(b, g);
    c = divexact(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool canonical_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const Rational& x = a.coeffs()[i];
    const Rational& y = b.coeffs()[i];
    if (x == y) continue;
    int c = cmp(abs(x), abs(y));
    if (c != 0) return c < 0;
    return x < y;
  }
  return false;
}

}  // namespace ffh
