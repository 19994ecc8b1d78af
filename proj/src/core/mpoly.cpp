#include "ffh/core/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "ffh/core/error.hpp"

namespace ffh {

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

namespace {

void check_compatible(const MPoly& a, const MPoly& b) {
  if (a.vars() != b.vars()) throw InputError("polynomials use different variable lists");
  if (a.field().get() != b.field().get()) throw InputError("polynomials over different coefficient fields");
}

}  // namespace

MPoly MPoly::constant(const FieldPtr& K, const std::vector<std::string>& vars, const Value& v) {
  MPoly p(K, vars);
  p.add_term(Exponents(vars.size(), 0), v);
  return p;
}

MPoly MPoly::variable(const FieldPtr& K, const std::vector<std::string>& vars, const std::string& name) {
  MPoly p(K, vars);
  const int i = p.var_index(name);
  if (i < 0) throw InputError("unknown variable '" + name + "'");
  Exponents e(vars.size(), 0);
  e[i] = 1;
  p.add_term(e, K->one());
  return p;
}

MPoly MPoly::from_upoly(const UPoly& p, const std::vector<std::string>& vars, int var) {
  MPoly r(p.field(), vars);
  for (int i = 0; i <= p.degree(); ++i) {
    Exponents e(vars.size(), 0);
    e[var] = i;
    r.add_term(e, p.coeffs()[i]);
  }
  return r;
}

int MPoly::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int MPoly::degree(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int MPoly::low_degree(int var) const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

Value MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? K_->zero() : it->second;
}

void MPoly::add_term(const Exponents& e, const Value& v) {
  if (K_->is_zero(v)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, v);
    return;
  }
  it->second = K_->add(it->second, v);
  if (K_->is_zero(it->second)) terms_.erase(it);
}

MPoly MPoly::operator-() const {
  MPoly r(K_, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, K_->neg(c));
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  check_compatible(a, b);
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  check_compatible(a, b);
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, a.K_->neg(c));
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_compatible(a, b);
  MPoly r(a.K_, a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, a.K_->mul(ca, cb));
    }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !a.K_->eq(ia->second, ib->second)) return false;
  return true;
}

MPoly MPoly::scale(const Value& s) const {
  MPoly r(K_, vars_);
  if (K_->is_zero(s)) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, K_->mul(c, s));
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(K_, vars_, K_->one()), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::vector<MPoly> MPoly::coefficients_in(int var) const {
  std::vector<MPoly> out(std::max(degree(var) + 1, 0), MPoly(K_, vars_));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out[e[var]].terms_.emplace(f, c);
  }
  return out;
}

MPoly MPoly::from_coefficients(const std::vector<MPoly>& c, int var) {
  if (c.empty()) throw InputError("empty coefficient list");
  MPoly r(c[0].K_, c[0].vars_);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (const auto& [e, v] : c[i].terms_) {
      Exponents f = e;
      f[var] += static_cast<int>(i);
      r.add_term(f, v);
    }
  return r;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
  auto c = coefficients_in(var);
  MPoly r(K_, vars_);
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * value + *it;
  return r;
}

MPoly MPoly::eval(int var, const Value& x) const {
  MPoly r(K_, vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    r.add_term(f, K_->mul(c, K_->pow(x, e[var])));
  }
  return r;
}

MPoly MPoly::derivative(int var) const {
  MPoly r(K_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    r.add_term(f, K_->mul(c, K_->from_rational(e[var])));
  }
  return r;
}

MPoly MPoly::shift_exponent(int var, int k) const {
  MPoly r(K_, vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] += k;
    if (f[var] < 0) throw InputError("negative exponent after shift");
    r.terms_.emplace(f, c);
  }
  return r;
}

UPoly MPoly::to_upoly(int var) const {
  std::vector<Value> c(std::max(degree(var) + 1, 0), K_->zero());
  for (const auto& [e, v] : terms_) {
    for (int i = 0; i < nvars(); ++i)
      if (i != var && e[i] != 0) throw InputError("polynomial is not univariate in " + vars_[var]);
    c[e[var]] = v;
  }
  return UPoly(K_, std::move(c));
}

MPoly MPoly::with_vars(const std::vector<std::string>& vars) const {
  MPoly r(K_, vars);
  std::vector<int> map(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = r.var_index(vars_[i]);
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) throw InputError("variable '" + vars_[i] + "' missing from target variable list");
      f[map[i]] = e[i];
    }
    r.terms_.emplace(f, c);
  }
  return r;
}

MPoly MPoly::lift_to(const FieldPtr& L) const {
  if (L.get() == K_.get()) return *this;
  if (!K_->is_ancestor_of(*L)) throw InputError("coefficient field is not a subfield of the target");
  MPoly r(L, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, L->lift(c, K_->depth()));
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string s = K_->render(c);
    const bool compound = s.find(' ') != std::string::npos || s.find('/') != std::string::npos;
    std::string term;
    if (mono.empty()) term = s;
    else if (s == "1") term = mono;
    else if (s == "-1") term = "-" + mono;
    else term = (compound ? "(" + s + ")" : s) + "*" + mono;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

bool divides(const MPoly& b, const MPoly& a, MPoly* quotient) {
  check_compatible(a, b);
  if (b.is_zero()) throw InputError("polynomial division by zero");
  const FieldPtr& K = a.field();
  MPoly r = a, q(K, a.vars());
  const auto& [lb, cb] = *b.terms().begin();
  Value icb = K->inv(cb);
  while (!r.is_zero()) {
    const auto& [lr, cr] = *r.terms().begin();
    Exponents d(lr.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] = lr[i] - lb[i];
      if (d[i] < 0) return false;
    }
    Value f = K->mul(cr, icb);
    MPoly t(K, a.vars());
    t.add_term(d, f);
    q.add_term(d, f);
    r = r - t * b;
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

MPoly divexact(const MPoly& a, const MPoly& b) {
  MPoly q;
  if (!divides(b, a, &q)) throw InputError("inexact multivariate division");
  return q;
}

MPoly determinant(std::vector<std::vector<MPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw InputError("empty matrix");
  const FieldPtr K = m[0][0].field();
  const auto vars = m[0][0].vars();
  MPoly prev = MPoly::constant(K, vars, K->one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MPoly(K, vars);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? v.scale(K->inv(prev.constant_term())) : divexact(v, prev);
      }
      m[i][k] = MPoly(K, vars);
    }
    prev = m[k][k];
  }
  MPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

MPoly resultant(const MPoly& a, const MPoly& b, int var) {
  check_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return MPoly(a.field(), a.vars());
  auto ca = a.coefficients_in(var), cb = b.coefficients_in(var);
  const int m = static_cast<int>(ca.size()) - 1, n = static_cast<int>(cb.size()) - 1;
  if (m == 0) return ca[0].pow(n);
  if (n == 0) return cb[0].pow(m);
  const int N = m + n;
  std::vector<std::vector<MPoly>> S(N, std::vector<MPoly>(N, MPoly(a.field(), a.vars())));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) S[i][i + k] = ca[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) S[n + i][i + k] = cb[n - k];
  return determinant(std::move(S));
}

MPoly discriminant(const MPoly& p, int var) {
  const int n = p.degree(var);
  if (n < 1) throw InputError("discriminant of a polynomial constant in " + p.vars()[var]);
  MPoly r = divexact(resultant(p, p.derivative(var), var), p.coefficients_in(var).back());
  return (static_cast<long>(n) * (n - 1) / 2) % 2 ? -r : r;
}

}  // namespace ffh
