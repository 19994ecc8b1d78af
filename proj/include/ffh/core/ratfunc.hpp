#pragma once

#include <ostream>
#include <string>

#include "ffh/core/qpoly.hpp"

namespace ffh {

// Element of Q(t): num/den with den monic and gcd(num, den) = 1.
// Zero is 0/1. Constants never allocate a denominator beyond "1".
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}         // NOLINT
  RatFunc(QPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RatFunc(QPoly num, QPoly den);

  static RatFunc t() { return RatFunc(QPoly::variable()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  Rational constant() const { return num_.coeff(0); }
  // max(deg num, deg den); the height of the element of k(t).
  int degree() const;

  RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  RatFunc pow(long e) const;
  Rational eval(const Rational& x) const;
  // Value at t = x, or false when x is a pole.
  bool try_eval(const Rational& x, Rational& out) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  struct raw_tag {};
  RatFunc(QPoly num, QPoly den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}
  QPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

}  // namespace ffh
