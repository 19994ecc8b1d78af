#include "ffh/core/field.hpp"

#include <sstream>

#include "ffh/core/error.hpp"

namespace ffh {

FieldPtr Field::rationals() {
  static const FieldPtr q = [] {
    std::shared_ptr<Field> f(new Field());
    f->symbol_ = "Q";
    return f;
  }();
  return q;
}

FieldPtr Field::rational_functions() {
  static const FieldPtr qt = [] {
    std::shared_ptr<Field> f(new Field());
    f->has_t_ = true;
    f->symbol_ = "Q(t)";
    return f;
  }();
  return qt;
}

FieldPtr Field::adjoin(const FieldPtr& parent, std::vector<Value> monic_modulus, std::string symbol,
                       Irreducibility status) {
  vpoly::trim(*parent, monic_modulus);
  if (monic_modulus.size() < 2) throw InputError("defining polynomial must be nonconstant");
  if (!parent->is_one(monic_modulus.back())) throw InputError("defining polynomial must be monic");
  std::shared_ptr<Field> f(new Field());
  f->parent_ = parent;
  f->depth_ = parent->depth_ + 1;
  f->has_t_ = parent->has_t_;
  f->modulus_ = std::move(monic_modulus);
  f->symbol_ = std::move(symbol);
  f->status_ = status;
  f->total_degree_ = parent->total_degree_ * f->degree();
  return f;
}

FieldPtr Field::base() const { return ancestor(0); }

FieldPtr Field::ancestor(int depth) const {
  if (depth > depth_ || depth < 0) throw InputError("ancestor depth out of range");
  FieldPtr f = shared_from_this();
  while (f->depth_ > depth) f = f->parent_;
  return f;
}

bool Field::is_ancestor_of(const Field& other) const {
  if (other.depth_ < depth_) return false;
  return other.ancestor(depth_).get() == this;
}

bool Field::certified() const {
  for (const Field* f = this; f; f = f->parent_.get())
    if (f->status_ != Irreducibility::Certified) return false;
  return true;
}

std::string Field::describe() const {
  if (depth_ == 0) return symbol_;
  std::vector<Value> m = modulus_;
  std::ostringstream os;
  os << parent_->describe() << "[" << symbol_ << "]/(";
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (parent_->is_zero(m[k])) continue;
    std::string s = parent_->render(m[k]);
    bool paren = s.find(' ') != std::string::npos;
    std::string term;
    if (k == 0) term = s;
    else {
      std::string pw = symbol_ + (k > 1 ? "^" + std::to_string(k) : "");
      if (s == "1") term = pw;
      else if (s == "-1") term = "-" + pw;
      else term = (paren ? "(" + s + ")" : s) + "*" + pw;
    }
    if (first) os << term;
    else if (term[0] == '-') os << " - " << term.substr(1);
    else os << " + " << term;
    first = false;
  }
  os << ")";
  return os.str();
}

Value Field::zero() const { return Value{}; }

Value Field::from_rational(const Rational& r) const {
  Value v;
  v.base = RatFunc(r);
  if (depth_ == 0 || r == 0) return depth_ == 0 ? v : Value{};
  return lift(v, 0);
}

Value Field::from_ratfunc(const RatFunc& r) const {
  if (!has_t_ && !r.is_constant()) throw InputError("element of Q(t) in a field over Q");
  Value v;
  v.base = r;
  if (depth_ == 0) return v;
  if (r.is_zero()) return Value{};
  return lift(v, 0);
}

Value Field::generator() const {
  if (depth_ == 0) throw InputError("base field has no generator");
  if (degree() == 1) return lift(parent_->neg(modulus_[0]), depth_ - 1);
  Value v;
  v.c = {parent_->zero(), parent_->one()};
  return v;
}

Value Field::lift(const Value& v, int from_depth) const {
  if (from_depth > depth_) throw InputError("cannot lift into a smaller field");
  if (from_depth == depth_) return v;
  FieldPtr src = ancestor(from_depth);
  if (src->is_zero(v)) return Value{};
  Value w = v;
  for (int d = from_depth; d < depth_; ++d) {
    Value up;
    up.c.push_back(std::move(w));
    w = std::move(up);
  }
  return w;
}

bool Field::is_zero(const Value& v) const {
  if (depth_ == 0) return v.base.is_zero();
  return v.c.empty();
}

bool Field::is_one(const Value& v) const {
  if (depth_ == 0) return v.base.is_one();
  return v.c.size() == 1 && parent_->is_one(v.c[0]);
}

bool Field::eq(const Value& a, const Value& b) const {
  if (depth_ == 0) return a.base == b.base;
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (!parent_->eq(a.c[i], b.c[i])) return false;
  return true;
}

bool Field::in_base(const Value& v, RatFunc* out) const {
  if (depth_ == 0) {
    if (out) *out = v.base;
    return true;
  }
  if (v.c.empty()) {
    if (out) *out = RatFunc();
    return true;
  }
  if (v.c.size() > 1) return false;
  return parent_->in_base(v.c[0], out);
}

bool Field::is_rational(const Value& v, Rational* out) const {
  RatFunc r;
  if (!in_base(v, &r) || !r.is_constant()) return false;
  if (out) *out = r.constant();
  return true;
}

Value Field::add(const Value& a, const Value& b) const {
  if (depth_ == 0) return Value{a.base + b.base, {}};
  Value r;
  r.c = vpoly::add(*parent_, a.c, b.c);
  return r;
}

Value Field::sub(const Value& a, const Value& b) const {
  if (depth_ == 0) return Value{a.base - b.base, {}};
  Value r;
  r.c = vpoly::sub(*parent_, a.c, b.c);
  return r;
}

Value Field::neg(const Value& a) const {
  if (depth_ == 0) return Value{-a.base, {}};
  Value r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(parent_->neg(x));
  return r;
}

Value Field::mul(const Value& a, const Value& b) const {
  if (depth_ == 0) return Value{a.base * b.base, {}};
  if (a.c.empty() || b.c.empty()) return Value{};
  Value r;
  if (a.c.size() == 1) {
    r.c = vpoly::scale(*parent_, b.c, a.c[0]);
    return r;
  }
  if (b.c.size() == 1) {
    r.c = vpoly::scale(*parent_, a.c, b.c[0]);
    return r;
  }
  r.c = vpoly::rem(*parent_, vpoly::mul(*parent_, a.c, b.c), modulus_);
  return r;
}

Value Field::mul_base(const Value& a, const RatFunc& s) const {
  if (depth_ == 0) return Value{a.base * s, {}};
  if (s.is_zero()) return Value{};
  Value r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(parent_->mul_base(x, s));
  return r;
}

Value Field::inv(const Value& a) const {
  if (is_zero(a)) throw ZeroDivisorError("division by zero");
  if (depth_ == 0) return Value{a.base.inverse(), {}};
  if (a.c.size() == 1) {
    Value r;
    r.c.push_back(parent_->inv(a.c[0]));
    return r;
  }
  vpoly::VPoly s, t;
  vpoly::VPoly g = vpoly::xgcd(*parent_, a.c, modulus_, s, t);
  if (g.size() != 1)
    throw ZeroDivisorError("non-invertible element; defining polynomial of " + symbol_ + " is reducible");
  Value r;
  r.c = std::move(s);
  return r;
}

Value Field::pow(const Value& a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  Value r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

std::vector<RatFunc> Field::coordinates(const Value& v) const {
  if (depth_ == 0) return {v.base};
  const int sub = parent_->total_degree_;
  std::vector<RatFunc> out(total_degree_);
  for (std::size_t k = 0; k < v.c.size(); ++k) {
    auto inner = parent_->coordinates(v.c[k]);
    for (int j = 0; j < sub; ++j) out[k * sub + j] = inner[j];
  }
  return out;
}

Value Field::from_coordinates(const std::vector<RatFunc>& c) const {
  if (static_cast<int>(c.size()) != total_degree_) throw InputError("coordinate vector has wrong length");
  if (depth_ == 0) return Value{c[0], {}};
  const int sub = parent_->total_degree_;
  Value r;
  for (int k = 0; k < degree(); ++k) {
    std::vector<RatFunc> inner(c.begin() + k * sub, c.begin() + (k + 1) * sub);
    r.c.push_back(parent_->from_coordinates(inner));
  }
  vpoly::trim(*parent_, r.c);
  return r;
}

std::string Field::render(const Value& v) const {
  if (depth_ == 0) return v.base.to_string("t");
  if (v.c.empty()) return "0";
  std::string out;
  for (int k = static_cast<int>(v.c.size()) - 1; k >= 0; --k) {
    if (parent_->is_zero(v.c[k])) continue;
    std::string s = parent_->render(v.c[k]);
    const bool compound = s.find(' ') != std::string::npos || s.find('/') != std::string::npos;
    std::string term;
    if (k == 0) {
      term = s;
    } else {
      std::string pw = symbol_ + (k > 1 ? "^" + std::to_string(k) : "");
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

std::ostream& operator<<(std::ostream& os, const Elem& e) { return os << e.to_string(); }

namespace vpoly {

void trim(const Field& K, VPoly& a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

VPoly add(const Field& K, const VPoly& a, const VPoly& b) {
  VPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size()) r[i] = K.add(a[i], b[i]);
    else if (i < a.size()) r[i] = a[i];
    else r[i] = b[i];
  }
  trim(K, r);
  return r;
}

VPoly sub(const Field& K, const VPoly& a, const VPoly& b) {
  VPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size()) r[i] = K.sub(a[i], b[i]);
    else if (i < a.size()) r[i] = a[i];
    else r[i] = K.neg(b[i]);
  }
  trim(K, r);
  return r;
}

VPoly mul(const Field& K, const VPoly& a, const VPoly& b) {
  if (a.empty() || b.empty()) return {};
  VPoly r(a.size() + b.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (K.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (K.is_zero(b[j])) continue;
      r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
  }
  trim(K, r);
  return r;
}

VPoly scale(const Field& K, const VPoly& a, const Value& s) {
  if (K.is_zero(s)) return {};
  if (K.is_one(s)) return a;
  VPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(K.mul(x, s));
  trim(K, r);
  return r;
}

VPoly rem(const Field& K, VPoly a, const VPoly& b, VPoly* q) {
  if (b.empty()) throw InputError("polynomial division by zero");
  const std::size_t db = b.size() - 1;
  const bool monic_b = K.is_one(b.back());
  Value il = monic_b ? K.one() : K.inv(b.back());
  if (q) q->assign(a.size() >= b.size() ? a.size() - db : 0, K.zero());
  while (a.size() >= b.size()) {
    Value f = monic_b ? a.back() : K.mul(a.back(), il);
    const std::size_t s = a.size() - 1 - db;
    for (std::size_t i = 0; i < db; ++i)
      if (!K.is_zero(b[i])) a[s + i] = K.sub(a[s + i], K.mul(f, b[i]));
    if (q) (*q)[s] = std::move(f);
    a.pop_back();
    trim(K, a);
  }
  if (q) trim(K, *q);
  return a;
}

VPoly monic(const Field& K, const VPoly& a) {
  if (a.empty() || K.is_one(a.back())) return a;
  return scale(K, a, K.inv(a.back()));
}

VPoly gcd(const Field& K, VPoly a, VPoly b) {
  while (!b.empty()) {
    VPoly r = rem(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(K, a);
}

VPoly xgcd(const Field& K, VPoly a, VPoly b, VPoly& s, VPoly& t) {
  VPoly s0{K.one()}, s1, t0, t1{K.one()};
  while (!b.empty()) {
    VPoly q;
    VPoly r = rem(K, a, b, &q);
    a = std::move(b);
    b = std::move(r);
    VPoly s2 = sub(K, s0, mul(K, q, s1));
    VPoly t2 = sub(K, t0, mul(K, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) {
    s.clear();
    t.clear();
    return a;
  }
  Value il = K.inv(a.back());
  s = scale(K, s0, il);
  t = scale(K, t0, il);
  return scale(K, a, il);
}

}  // namespace vpoly

}  // namespace ffh
