#include "ffh/core/upoly.hpp"

#include "ffh/core/error.hpp"

namespace ffh {

UPoly::UPoly(FieldPtr K, std::vector<Value> c) : K_(std::move(K)), c_(std::move(c)) { vpoly::trim(*K_, c_); }

UPoly UPoly::monomial(const FieldPtr& K, const Value& v, int degree) {
  if (K->is_zero(v)) return UPoly(K);
  std::vector<Value> c(degree + 1, K->zero());
  c[degree] = v;
  return UPoly(K, std::move(c));
}

UPoly UPoly::from_qpoly(const FieldPtr& K, const QPoly& p) {
  std::vector<Value> c;
  for (const auto& x : p.coeffs()) c.push_back(K->from_rational(x));
  return UPoly(K, std::move(c));
}

UPoly UPoly::operator-() const {
  UPoly r(K_);
  for (const auto& x : c_) r.c_.push_back(K_->neg(x));
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) { return UPoly(a.K_, vpoly::add(*a.K_, a.c_, b.c_)); }
UPoly operator-(const UPoly& a, const UPoly& b) { return UPoly(a.K_, vpoly::sub(*a.K_, a.c_, b.c_)); }
UPoly operator*(const UPoly& a, const UPoly& b) { return UPoly(a.K_, vpoly::mul(*a.K_, a.c_, b.c_)); }

bool operator==(const UPoly& a, const UPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!a.K_->eq(a.c_[i], b.c_[i])) return false;
  return true;
}

UPoly UPoly::scale(const Value& s) const { return UPoly(K_, vpoly::scale(*K_, c_, s)); }

UPoly UPoly::monic() const { return UPoly(K_, vpoly::monic(*K_, c_)); }

UPoly UPoly::derivative() const {
  std::vector<Value> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(K_->mul(c_[i], K_->from_rational(static_cast<long>(i))));
  return UPoly(K_, std::move(d));
}

Value UPoly::eval(const Value& x) const {
  Value r = K_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = K_->add(K_->mul(r, x), *it);
  return r;
}

UPoly UPoly::compose(const UPoly& q) const {
  UPoly r(K_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + constant(K_, *it);
  return r;
}

UPoly UPoly::shift(const Value& s) const {
  return compose(UPoly(K_, {s, K_->one()}));
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r = constant(K_, K_->one()), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

UPoly UPoly::lift_to(const FieldPtr& L) const {
  if (L.get() == K_.get()) return *this;
  if (!K_->is_ancestor_of(*L)) throw InputError("polynomial field is not a subfield of the target");
  std::vector<Value> c;
  for (const auto& x : c_) c.push_back(L->lift(x, K_->depth()));
  return UPoly(L, std::move(c));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (K_->is_zero(c_[k])) continue;
    std::string s = K_->render(c_[k]);
    const bool compound = s.find(' ') != std::string::npos || s.find('/') != std::string::npos;
    std::string term;
    if (k == 0) {
      term = s;
    } else {
      std::string pw = var + (k > 1 ? "^" + std::to_string(k) : "");
      if (s == "1") term = pw;
      else if (s == "-1") term = "-" + pw;
      else term = (compound ? "(" + s + ")" : s) + "*" + pw;
    }
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
  std::vector<Value> q;
  std::vector<Value> r = vpoly::rem(*a.field(), a.coeffs(), b.coeffs(), &q);
  return {UPoly(a.field(), std::move(q)), UPoly(a.field(), std::move(r))};
}

UPoly divexact(const UPoly& a, const UPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InputError("inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  const FieldPtr& K = a.field() ? a.field() : b.field();
  return UPoly(K, vpoly::gcd(*K, a.coeffs(), b.coeffs()));
}

UPoly xgcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
  const FieldPtr& K = a.field();
  std::vector<Value> S, T;
  std::vector<Value> g = vpoly::xgcd(*K, a.coeffs(), b.coeffs(), S, T);
  s = UPoly(K, std::move(S));
  t = UPoly(K, std::move(T));
  return UPoly(K, std::move(g));
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  return divexact(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() <= 0) return out;
  UPoly f = p.monic();
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = divexact(f, a);
  UPoly c = divexact(fp, a);
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divexact(b, g);
    c = divexact(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Value resultant(const UPoly& a0, const UPoly& b0) {
  const FieldPtr& K = a0.field();
  if (a0.is_zero() || b0.is_zero()) return K->zero();
  UPoly a = a0, b = b0;
  Value acc = K->one();
  if (b.degree() == 0) return K->pow(b.lead(), a.degree());
  if (a.degree() == 0) return K->pow(a.lead(), b.degree());
  while (true) {
    const int m = a.degree(), n = b.degree();
    UPoly r = divrem(a, b).second;
    if (r.is_zero()) return K->zero();
    const int k = r.degree();
    Value f = K->pow(b.lead(), m - k);
    if ((static_cast<long>(m) * n) % 2) f = K->neg(f);
    acc = K->mul(acc, f);
    a = std::move(b);
    b = std::move(r);
    if (b.degree() == 0) return K->mul(acc, K->pow(b.lead(), a.degree()));
  }
}

Value discriminant(const UPoly& p) {
  const FieldPtr& K = p.field();
  const int n = p.degree();
  if (n < 1) throw InputError("discriminant of a constant polynomial");
  Value r = K->div(resultant(p, p.derivative()), p.lead());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2) r = K->neg(r);
  return r;
}

}  // namespace ffh
