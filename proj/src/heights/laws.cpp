#include "ffh/heights/laws.hpp"

#include <map>

#include "ffh/core/error.hpp"

namespace ffh {

namespace {

std::string render_point(const std::vector<Elem>& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " : " : "") + b[i].to_string();
  return s + ")";
}

const FieldPtr& common_field(const std::vector<Elem>& b) {
  if (b.empty()) throw InputError("empty point");
  for (const auto& e : b)
    if (e.field() != b[0].field()) throw InputError("coordinates lie in different fields");
  return b[0].field();
}

Value embed(const FieldPtr& K, const Value& v, const FieldPtr& L) {
  if (K == L) return v;
  if (K->is_ancestor_of(*L)) return L->lift(v, K->depth());
  Rational r;
  if (K->is_base() && !K->has_t() && K->is_rational(v, &r)) return L->from_rational(r);
  throw InputError("coefficient field " + K->describe() + " does not embed into " + L->describe());
}

Rational h(const Elem& a) { return height_element(a); }

void check_same_field(const Elem& a, const Elem& b) {
  if (a.field() != b.field()) throw InputError("elements lie in different fields");
}

}  // namespace

HeightLawReport make_report(std::string law, std::string inputs, const Rational& lhs, const std::string& relation,
                            const Rational& rhs) {
  HeightLawReport r;
  r.law = std::move(law);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = relation;
  r.satisfied = relation == "=" ? lhs == rhs : lhs <= rhs;
  return r;
}

const std::vector<std::string>& law_ids() {
  static const std::vector<std::string> ids = {
      "power",         "morphism",   "polynomial-value", "sum",        "product", "mobius",
      "concatenation", "coordinate-sum", "resultant",    "shift",      "divisibility",
      "root",          "veronese",   "polynomial-product"};
  return ids;
}

Value evaluate(const MPoly& p, const FieldPtr& L, const std::vector<Value>& point) {
  if (static_cast<int>(point.size()) != p.nvars()) throw InputError("point has the wrong number of coordinates");
  std::vector<std::map<int, Value>> powers(point.size());
  auto power = [&](std::size_t i, int e) -> const Value& {
    auto it = powers[i].find(e);
    if (it == powers[i].end()) it = powers[i].emplace(e, L->pow(point[i], e)).first;
    return it->second;
  };
  Value acc = L->zero();
  for (const auto& [e, c] : p.terms()) {
    Value term = embed(p.field(), c, L);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = L->mul(term, power(i, e[i]));
    acc = L->add(acc, term);
  }
  return acc;
}

std::vector<Exponents> monomials_of_degree(int nvars, int d) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nvars > 0) rec(rec, 0, d);
  return out;
}

HeightLawReport law_power(const Elem& a, long n) {
  if (a.is_zero()) throw InputError("power law needs a nonzero element");
  if (n < 0) throw InputError("power law needs n >= 0");
  const Rational up = h(a.pow(n)), down = h(a.pow(-n));
  auto r = make_report("power", "a=" + a.to_string() + ", n=" + std::to_string(n), up, "=", n * h(a));
  r.satisfied = r.satisfied && up == down;
  return r;
}

HeightLawReport law_morphism(const std::vector<std::vector<Elem>>& blocks, const std::vector<MPoly>& phi) {
  if (blocks.empty() || phi.empty()) throw InputError("morphism needs blocks and components");
  std::vector<Elem> flat;
  std::vector<int> block_of;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].empty()) throw InputError("empty block");
    for (const auto& e : blocks[j]) {
      flat.push_back(e);
      block_of.push_back(static_cast<int>(j));
    }
  }
  const FieldPtr L = common_field(flat);
  std::vector<int> deg;
  for (const auto& f : phi) {
    if (f.nvars() != static_cast<int>(flat.size())) throw InputError("component has the wrong number of variables");
    if (f.is_zero()) throw InputError("zero component");
    for (const auto& [e, c] : f.terms()) {
      std::vector<int> d(blocks.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) d[block_of[i]] += e[i];
      if (deg.empty()) deg = d;
      if (d != deg) throw InputError("components are not multihomogeneous of common degrees");
    }
  }
  std::vector<Value> pt;
  for (const auto& e : flat) pt.push_back(e.value());
  std::vector<Elem> image, coeffs;
  bool defined = false;
  for (const auto& f : phi) {
    image.emplace_back(L, evaluate(f, L, pt));
    defined = defined || !image.back().is_zero();
    for (const auto& [e, c] : f.terms()) coeffs.emplace_back(f.field(), c);
  }
  if (!defined) throw InputError("morphism is not defined at the point");
  common_field(coeffs);
  Rational rhs = height_point(coeffs);
  std::string inputs;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    rhs += deg[j] * height_point(blocks[j]);
    inputs += (j ? ", " : "") + render_point(blocks[j]);
  }
  return make_report("morphism", inputs, height_point(image), "<=", rhs);
}

HeightLawReport law_polynomial_value(const MPoly& q, const std::vector<Elem>& b) {
  if (q.field()->has_t() || !q.field()->is_base()) throw InputError("polynomial must have rational coefficients");
  const FieldPtr L = common_field(b);
  std::vector<Value> pt;
  for (const auto& e : b) pt.push_back(e.value());
  Elem v(L, evaluate(q, L, pt));
  Rational rhs = 0;
  for (int i = 0; i < q.nvars(); ++i) rhs += q.degree(i) * h(b[i]);
  return make_report("polynomial-value", "Q=" + q.to_string() + ", b=" + render_point(b), h(v), "<=", rhs);
}

HeightLawReport law_sum(const Elem& a, const Elem& b) {
  check_same_field(a, b);
  return make_report("sum", "a=" + a.to_string() + ", b=" + b.to_string(), h(a + b), "<=", h(a) + h(b));
}

HeightLawReport law_product(const Elem& a, const Elem& b) {
  check_same_field(a, b);
  return make_report("product", "a=" + a.to_string() + ", b=" + b.to_string(), h(a * b), "<=", h(a) + h(b));
}

HeightLawReport law_mobius(const Elem& a, const std::array<Rational, 4>& c) {
  if (c[0] * c[3] - c[1] * c[2] == 0) throw InputError("mobius coefficients have c1*c4 - c2*c3 = 0");
  const FieldPtr& K = a.field();
  Elem den = Elem::rational(K, c[2]) * a + Elem::rational(K, c[3]);
  Rational lhs = 0;  // h(infinity) = 0
  if (!den.is_zero()) lhs = h((Elem::rational(K, c[0]) * a + Elem::rational(K, c[1])) / den);
  std::string in = "a=" + a.to_string() + ", c=(" + to_short(c[0]) + "," + to_short(c[1]) + "," + to_short(c[2]) +
                   "," + to_short(c[3]) + ")";
  return make_report("mobius", in, lhs, "=", h(a));
}

HeightLawReport law_concatenation(const std::vector<Elem>& b1, const std::vector<Elem>& b2) {
  std::vector<Elem> n1 = b1, n2 = b2;
  for (auto* b : {&n1, &n2}) {
    common_field(*b);
    if ((*b)[0].is_zero()) throw InputError("first coordinate must be nonzero");
    const Elem inv = (*b)[0].inverse();
    for (auto& e : *b) e = e * inv;
  }
  std::vector<Elem> c = n1;
  c.insert(c.end(), n2.begin(), n2.end());
  common_field(c);
  return make_report("concatenation", render_point(b1) + ", " + render_point(b2), height_point(c), "<=",
                     height_point(n1) + height_point(n2));
}

HeightLawReport law_coordinate_sum(const std::vector<Elem>& b) {
  common_field(b);
  Rational rhs = 0;
  for (const auto& e : b) rhs += h(e);
  return make_report("coordinate-sum", render_point(b), height_point(b), "<=", rhs);
}

HeightLawReport law_resultant(const MPoly& p1, const MPoly& p2, const std::string& var) {
  if (p1.field() != p2.field() || p1.vars() != p2.vars()) throw InputError("polynomials must share field and variables");
  const int v = p1.var_index(var);
  if (v < 0) throw InputError("unknown resultant variable " + var);
  MPoly r = resultant(p1, p2, v);
  const Rational lhs = r.is_zero() ? Rational(0) : height_polynomial(r);
  const Rational rhs = p2.degree(v) * height_polynomial(p1) + p1.degree(v) * height_polynomial(p2);
  return make_report("resultant", "P1=" + p1.to_string() + ", P2=" + p2.to_string(), lhs, "<=", rhs);
}

HeightLawReport law_shift(const MPoly& p, const Elem& a, const Elem& b) {
  check_same_field(a, b);
  const int x = p.var_index("X"), y = p.var_index("Y");
  if (x < 0 || y < 0) throw InputError("shift law needs a polynomial in X and Y");
  const FieldPtr& L = a.field();
  MPoly q = p.field() == L ? p : p.lift_to(L);
  MPoly X = MPoly::variable(L, q.vars(), "X"), Y = MPoly::variable(L, q.vars(), "Y");
  MPoly s = q.substitute(x, X + MPoly::constant(L, q.vars(), a.value()));
  s = s.substitute(y, Y + MPoly::constant(L, q.vars(), b.value()));
  const Rational rhs = height_polynomial(p) + p.degree(x) * h(a) + p.degree(y) * h(b);
  return make_report("shift", "P=" + p.to_string() + ", a=" + a.to_string() + ", b=" + b.to_string(),
                     height_polynomial(s), "<=", rhs);
}

HeightLawReport law_divisibility(const MPoly& g, const MPoly& hh) {
  MPoly gh = g * hh;
  return make_report("divisibility", "G=" + g.to_string() + ", GH=" + gh.to_string(), height_polynomial(g), "<=",
                     height_polynomial(gh));
}

HeightLawReport law_root(const UPoly& hp, const Elem& a) {
  UPoly q = hp.field() == a.field() ? hp : hp.lift_to(a.field());
  if (!a.field()->is_zero(q.eval(a.value()))) throw InputError("a is not a root of H");
  return make_report("root", "H=" + hp.to_string("X") + ", a=" + a.to_string(), h(a), "<=", height_polynomial(hp));
}

HeightLawReport law_veronese(const std::vector<Elem>& a, int d) {
  const FieldPtr L = common_field(a);
  if (d < 1) throw InputError("veronese degree must be positive");
  std::vector<Value> pt;
  for (const auto& e : a) pt.push_back(e.value());
  std::vector<Elem> image;
  for (const auto& e : monomials_of_degree(static_cast<int>(a.size()), d)) {
    Value v = L->one();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) v = L->mul(v, L->pow(pt[i], e[i]));
    image.emplace_back(L, v);
  }
  return make_report("veronese", render_point(a) + ", d=" + std::to_string(d), height_point(image), "=",
                     d * height_point(a));
}

HeightLawReport law_polynomial_product(const MPoly& g, const MPoly& hh) {
  return make_report("polynomial-product", "G=" + g.to_string() + ", H=" + hh.to_string(),
                     height_polynomial(g * hh), "=", height_polynomial(g) + height_polynomial(hh));
}

std::vector<HeightLawReport> special_curve_check(const MPoly& q0, const Elem& alpha, const Elem& beta) {
  check_same_field(alpha, beta);
  MPoly q = q0.with_vars({"X", "Y"});
  const FieldPtr& L = alpha.field();
  if (!L->is_zero(evaluate(q, L, {alpha.value(), beta.value()}))) throw InputError("point is not on the curve");
  const int m = q.degree(0), n = q.degree(1);
  const Rational hq = height_polynomial(q), ha = h(alpha), hb = h(beta);
  const std::string in = "q=" + q.to_string() + ", alpha=" + alpha.to_string() + ", beta=" + beta.to_string();
  std::vector<HeightLawReport> out;
  if (n == q.total_degree()) out.push_back(make_report("special-curve", in, hb, "<=", ha + hq));
  bool weights = m > 0 && n > 0;
  for (const auto& [e, c] : q.terms()) weights = weights && m * e[1] + n * e[0] <= m * n;
  if (weights) {
    out.push_back(make_report("special-curve-lower", in, n * hb - m * n * hq, "<=", m * ha));
    out.push_back(make_report("special-curve-upper", in, m * ha, "<=", n * hb + m * n * hq));
  }
  if (out.empty()) throw InputError("hypothesis violated: deg(q,Y) != tdeg(q) and some term has m*j + n*i > m*n");
  return out;
}

}  // namespace ffh
