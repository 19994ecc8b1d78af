#include "ffh/core/ratfunc.hpp"

#include <algorithm>

#include "ffh/core/error.hpp"

namespace ffh {

RatFunc::RatFunc(QPoly num, QPoly den) {
  if (den.is_zero()) throw InputError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (den.is_constant()) {
    num_ = num * (1 / den.lead());
    den_ = QPoly(1);
    return;
  }
  QPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = divexact(num, g);
    den = divexact(den, g);
  }
  Rational l = den.lead();
  num_ = num * (1 / l);
  den_ = den.monic();
}

int RatFunc::degree() const { return std::max(num_.degree(), den_.degree()); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ += o.num_;
      return *this;
    }
    *this = RatFunc(num_ + o.num_, den_);
    return *this;
  }
  if (den_.is_one()) {
    *this = RatFunc(num_ * o.den_ + o.num_, o.den_, raw_tag{});
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  if (o.is_constant()) {
    num_ *= o.constant();
    return *this;
  }
  if (is_constant()) {
    Rational c = constant();
    *this = o;
    num_ *= c;
    return *this;
  }
  // Cross-cancel before multiplying to keep the gcd small.
  QPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  QPoly n1 = g1.is_one() ? num_ : divexact(num_, g1);
  QPoly d2 = g1.is_one() ? o.den_ : divexact(o.den_, g1);
  QPoly n2 = g2.is_one() ? o.num_ : divexact(o.num_, g2);
  QPoly d1 = g2.is_one() ? den_ : divexact(den_, g2);
  QPoly d = d1 * d2;
  Rational l = d.lead();
  *this = RatFunc(n1 * n2 * (1 / l), d.monic(), raw_tag{});
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroDivisorError("inverse of zero rational function");
  Rational l = num_.lead();
  return RatFunc(den_ * (1 / l), num_.monic(), raw_tag{});
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), raw_tag{});
}

Rational RatFunc::eval(const Rational& x) const {
  Rational out;
  if (!try_eval(x, out)) throw ZeroDivisorError("rational function evaluated at a pole");
  return out;
}

bool RatFunc::try_eval(const Rational& x, Rational& out) const {
  Rational d = den_.eval(x);
  if (d == 0) return false;
  out = num_.eval(x) / d;
  return true;
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.is_one()) return num_.to_string(var);
  std::string n = num_.to_string(var);
  int terms = 0;
  for (const auto& c : num_.coeffs()) terms += c != 0;
  if (terms > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

}  // namespace ffh
