#include "ffh/places/series.hpp"

#include <algorithm>

namespace ffh {

Laurent Laurent::monomial(const FieldPtr& K, const Value& v, long e) {
  Laurent r(K);
  if (!K->is_zero(v)) {
    r.val = e;
    r.c.push_back(v);
  }
  return r;
}

Value Laurent::coeff(long e) const {
  if (e < val || e >= val + static_cast<long>(c.size())) return K->zero();
  return c[e - val];
}

void Laurent::normalize() {
  if (!exact() && val + static_cast<long>(c.size()) > prec)
    c.resize(prec > val ? static_cast<std::size_t>(prec - val) : 0);
  std::size_t lead = 0;
  while (lead < c.size() && K->is_zero(c[lead])) ++lead;
  if (lead == c.size()) {
    c.clear();
    val = 0;
    return;
  }
  if (lead) {
    c.erase(c.begin(), c.begin() + static_cast<long>(lead));
    val += static_cast<long>(lead);
  }
  while (!c.empty() && K->is_zero(c.back())) c.pop_back();
}

Laurent Laurent::truncated(long p) const {
  Laurent r = *this;
  r.prec = std::min(prec, p);
  r.normalize();
  return r;
}

Laurent Laurent::lift_to(const FieldPtr& L) const {
  Laurent r(L);
  r.val = val;
  r.prec = prec;
  r.c.reserve(c.size());
  for (const auto& v : c) r.c.push_back(L->lift(v, K->depth()));
  return r;
}

std::string Laurent::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (K->is_zero(c[i])) continue;
    std::string s = K->render(c[i]);
    if (s.find(' ') != std::string::npos || s.find('/') != std::string::npos) s = "(" + s + ")";
    const long e = val + static_cast<long>(i);
    std::string term = s;
    if (e != 0) term += "*" + var + (e != 1 ? "^" + std::to_string(e) : "");
    out += out.empty() ? term : " + " + term;
  }
  if (out.empty()) out = "0";
  if (!exact()) out += " + O(" + var + "^" + std::to_string(prec) + ")";
  return out;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.known_zero() && a.exact()) return b;
  if (b.known_zero() && b.exact()) return a;
  Laurent r(a.K);
  r.prec = std::min(a.prec, b.prec);
  const long lo = std::min(a.known_zero() ? b.val : a.val, b.known_zero() ? a.val : b.val);
  long hi = std::max(a.val + static_cast<long>(a.c.size()), b.val + static_cast<long>(b.c.size()));
  hi = std::min(hi, r.prec);
  r.val = lo;
  for (long e = lo; e < hi; ++e) r.c.push_back(a.K->add(a.coeff(e), b.coeff(e)));
  r.normalize();
  return r;
}

Laurent operator-(const Laurent& a) {
  Laurent r = a;
  for (auto& v : r.c) v = a.K->neg(v);
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent scale(const Laurent& a, const Value& s) {
  Laurent r = a;
  for (auto& v : r.c) v = a.K->mul(v, s);
  r.normalize();
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  const FieldPtr& K = a.K;
  Laurent r(K);
  // Known absolute precision of the product.
  long p = Laurent::kExact;
  if (!b.exact()) p = std::min(p, a.order() + b.prec);
  if (!a.exact()) p = std::min(p, b.order() + a.prec);
  r.prec = p;
  if (a.c.empty() || b.c.empty()) {
    r.normalize();
    return r;
  }
  r.val = a.val + b.val;
  long len = static_cast<long>(a.c.size() + b.c.size()) - 1;
  if (p < Laurent::kExact) len = std::max(0L, std::min(len, p - r.val));
  r.c.assign(static_cast<std::size_t>(len), Value{});
  for (auto& v : r.c) v = K->zero();
  for (std::size_t i = 0; i < a.c.size() && static_cast<long>(i) < len; ++i) {
    if (K->is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size() && static_cast<long>(i + j) < len; ++j)
      if (!K->is_zero(b.c[j])) r.c[i + j] = K->add(r.c[i + j], K->mul(a.c[i], b.c[j]));
  }
  r.normalize();
  return r;
}

Laurent pow(const Laurent& a, unsigned e) {
  Laurent r = Laurent::constant(a.K, a.K->one());
  Laurent b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

}  // namespace ffh
