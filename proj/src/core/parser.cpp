#include "ffh/core/parser.hpp"

#include <cctype>

#include "ffh/core/error.hpp"

namespace ffh {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  static ExprPtr node(Expr::Kind k, std::size_t off, std::vector<ExprPtr> kids) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->offset = off;
    e->kids = std::move(kids);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (true) {
      if (peek('+')) {
        std::size_t off = pos_++;
        lhs = node(Expr::Kind::Add, off, {lhs, term()});
      } else if (peek('-')) {
        std::size_t off = pos_++;
        lhs = node(Expr::Kind::Sub, off, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (true) {
      if (peek('*')) {
        std::size_t off = pos_++;
        lhs = node(Expr::Kind::Mul, off, {lhs, unary()});
      } else if (peek('/')) {
        std::size_t off = pos_++;
        lhs = node(Expr::Kind::Div, off, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (peek('-')) {
      std::size_t off = pos_++;
      return node(Expr::Kind::Neg, off, {unary()});
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!peek('^')) return base;
    std::size_t off = pos_++;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected integer exponent", pos_);
    if (pos_ - start > 6) throw SyntaxError("exponent too large", start);
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->offset = off;
    e->exponent = std::stol(s_.substr(start, pos_ - start)) * (neg ? -1 : 1);
    e->kids = {base};
    return e;
  }

  ExprPtr atom() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!peek(')')) throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->offset = start;
      e->number = Rational(Integer(s_.substr(start, pos_ - start)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Symbol;
      e->offset = start;
      e->symbol = s_.substr(start, pos_ - start);
      return e;
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// Depth of a tower generator symbol "uK", or 0 when the name is not one.
int generator_depth(const std::string& name) {
  if (name.size() < 2 || name[0] != 'u') return 0;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
  if (name[1] == '0') return 0;
  return std::stoi(name.substr(1));
}

// Indexed variable "X0", "X1", ... used for multihomogeneous polynomials.
bool indexed_variable(const std::string& s) {
  if (s.size() < 2 || s[0] != 'X') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool known_symbol(const std::string& s) {
  return s == "t" || s == "X" || s == "Y" || s == "Z" || s == "z" || generator_depth(s) > 0 || indexed_variable(s);
}

// Generic evaluator over a ring with the operations below.
template <class R, class Ops>
R evaluate(const ExprPtr& e, const Ops& ops) {
  switch (e->kind) {
    case Expr::Kind::Number:
      return ops.number(e->number);
    case Expr::Kind::Symbol:
      if (!known_symbol(e->symbol)) throw SyntaxError("unknown symbol '" + e->symbol + "'", e->offset);
      return ops.symbol(e->symbol, e->offset);
    case Expr::Kind::Add:
      return ops.add(evaluate<R>(e->kids[0], ops), evaluate<R>(e->kids[1], ops));
    case Expr::Kind::Sub:
      return ops.sub(evaluate<R>(e->kids[0], ops), evaluate<R>(e->kids[1], ops));
    case Expr::Kind::Mul:
      return ops.mul(evaluate<R>(e->kids[0], ops), evaluate<R>(e->kids[1], ops));
    case Expr::Kind::Div:
      return ops.div(evaluate<R>(e->kids[0], ops), evaluate<R>(e->kids[1], ops), e->offset);
    case Expr::Kind::Neg:
      return ops.neg(evaluate<R>(e->kids[0], ops));
    case Expr::Kind::Pow:
      return ops.pow(evaluate<R>(e->kids[0], ops), e->exponent, e->offset);
  }
  throw InputError("malformed expression");
}

struct RatFuncOps {
  RatFunc number(const Rational& r) const { return RatFunc(r); }
  RatFunc symbol(const std::string& s, std::size_t off) const {
    if (s != "t") throw SyntaxError("symbol '" + s + "' not allowed in an element of Q(t)", off);
    return RatFunc::t();
  }
  RatFunc add(const RatFunc& a, const RatFunc& b) const { return a + b; }
  RatFunc sub(const RatFunc& a, const RatFunc& b) const { return a - b; }
  RatFunc mul(const RatFunc& a, const RatFunc& b) const { return a * b; }
  RatFunc div(const RatFunc& a, const RatFunc& b, std::size_t off) const {
    if (b.is_zero()) throw SyntaxError("division by zero", off);
    return a / b;
  }
  RatFunc neg(const RatFunc& a) const { return -a; }
  RatFunc pow(const RatFunc& a, long e, std::size_t off) const {
    if (e < 0 && a.is_zero()) throw SyntaxError("division by zero", off);
    return a.pow(e);
  }
};

struct MPolyOps {
  FieldPtr K;
  std::vector<std::string> vars;
  MPoly number(const Rational& r) const { return MPoly::constant(K, vars, K->from_rational(r)); }
  MPoly symbol(const std::string& s, std::size_t off) const {
    if (s == "t") {
      if (!K->has_t()) throw SyntaxError("symbol 't' not allowed over Q", off);
      return MPoly::constant(K, vars, K->from_ratfunc(RatFunc::t()));
    }
    if (int d = generator_depth(s); d > 0) {
      if (d > K->depth()) throw SyntaxError("generator '" + s + "' not in the coefficient field", off);
      FieldPtr level = K->ancestor(d);
      return MPoly::constant(K, vars, K->lift(level->generator(), d));
    }
    for (const auto& v : vars)
      if (v == s) return MPoly::variable(K, vars, s);
    throw SyntaxError("symbol '" + s + "' not allowed here", off);
  }
  MPoly add(const MPoly& a, const MPoly& b) const { return a + b; }
  MPoly sub(const MPoly& a, const MPoly& b) const { return a - b; }
  MPoly mul(const MPoly& a, const MPoly& b) const { return a * b; }
  MPoly div(const MPoly& a, const MPoly& b, std::size_t off) const {
    if (b.is_zero()) throw SyntaxError("division by zero", off);
    if (!b.is_constant()) throw SyntaxError("division by a non-constant polynomial", off);
    return a.scale(K->inv(b.constant_term()));
  }
  MPoly neg(const MPoly& a) const { return -a; }
  MPoly pow(const MPoly& a, long e, std::size_t off) const {
    if (e < 0) {
      if (!a.is_constant() || a.is_zero()) throw SyntaxError("negative power of a non-constant polynomial", off);
      return MPoly::constant(K, vars, K->pow(a.constant_term(), e));
    }
    return a.pow(static_cast<unsigned>(e));
  }
};

struct FractionOps {
  MPolyOps base;
  Fraction wrap(MPoly p) const { return Fraction{std::move(p), base.number(1)}; }
  Fraction number(const Rational& r) const { return wrap(base.number(r)); }
  Fraction symbol(const std::string& s, std::size_t off) const { return wrap(base.symbol(s, off)); }
  Fraction add(const Fraction& a, const Fraction& b) const {
    if (a.den == b.den) return Fraction{a.num + b.num, a.den};
    return Fraction{a.num * b.den + b.num * a.den, a.den * b.den};
  }
  Fraction sub(const Fraction& a, const Fraction& b) const { return add(a, neg(b)); }
  Fraction mul(const Fraction& a, const Fraction& b) const { return Fraction{a.num * b.num, a.den * b.den}; }
  Fraction div(const Fraction& a, const Fraction& b, std::size_t off) const {
    if (b.num.is_zero()) throw SyntaxError("division by zero", off);
    return Fraction{a.num * b.den, a.den * b.num};
  }
  Fraction neg(const Fraction& a) const { return Fraction{-a.num, a.den}; }
  Fraction pow(const Fraction& a, long e, std::size_t off) const {
    if (e < 0) {
      if (a.num.is_zero()) throw SyntaxError("division by zero", off);
      return Fraction{a.den.pow(static_cast<unsigned>(-e)), a.num.pow(static_cast<unsigned>(-e))};
    }
    return Fraction{a.num.pow(static_cast<unsigned>(e)), a.den.pow(static_cast<unsigned>(e))};
  }
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

RatFunc to_ratfunc(const ExprPtr& e) { return evaluate<RatFunc>(e, RatFuncOps{}); }

MPoly to_mpoly(const ExprPtr& e, const FieldPtr& K, const std::vector<std::string>& vars) {
  return evaluate<MPoly>(e, MPolyOps{K, vars});
}

Fraction to_fraction(const ExprPtr& e, const FieldPtr& K, const std::vector<std::string>& vars) {
  Fraction f = evaluate<Fraction>(e, FractionOps{MPolyOps{K, vars}});
  if (f.den.is_constant()) {
    Value inv = K->inv(f.den.constant_term());
    f.num = f.num.scale(inv);
    f.den = MPoly::constant(K, vars, K->one());
  }
  return f;
}

Elem to_elem(const ExprPtr& e, const FieldPtr& K) {
  MPoly p = to_mpoly(e, K, {});
  return Elem(K, p.constant_term());
}

RatFunc parse_ratfunc(const std::string& text) { return to_ratfunc(parse_expression(text)); }

MPoly parse_mpoly(const std::string& text, const FieldPtr& K, const std::vector<std::string>& vars) {
  return to_mpoly(parse_expression(text), K, vars);
}

Elem parse_elem(const std::string& text, const FieldPtr& K) { return to_elem(parse_expression(text), K); }

bool mentions_symbol(const ExprPtr& e, const std::string& name) {
  if (e->kind == Expr::Kind::Symbol) return e->symbol == name;
  for (const auto& k : e->kids)
    if (mentions_symbol(k, name)) return true;
  return false;
}

FieldPtr natural_base(const ExprPtr& e) {
  return mentions_symbol(e, "t") ? Field::rational_functions() : Field::rationals();
}

}  // namespace ffh
