#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ffh/core/rational.hpp"

namespace ffh {

// Dense univariate polynomial over Q; coefficient i multiplies var^i.
// Trailing zeros are never stored, so the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(const Rational& c);  // NOLINT: constants convert implicitly
  QPoly(long c) : QPoly(Rational(c)) {}  // NOLINT

  static QPoly monomial(const Rational& c, int degree);
  static QPoly variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  QPoly monic() const;
  QPoly derivative() const;
  Rational eval(const Rational& x) const;
  // p(var + shift)
  QPoly shifted(const Rational& shift) const;
  // p(var^k)
  QPoly inflate(int k) const;
  QPoly pow(unsigned e) const;
  // Multiplicity of var as a factor (order at 0); -1 for the zero polynomial.
  int low_order() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

// Euclidean division; throws InputError when b is zero.
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
// a / b, throwing when the division is not exact.
QPoly divexact(const QPoly& a, const QPoly& b);
// Monic gcd (zero only when both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
QPoly lcm(const QPoly& a, const QPoly& b);
// Returns g = gcd (monic) and s, t with s*a + t*b = g.
QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);
QPoly squarefree_part(const QPoly& p);
// Yun's algorithm: p = lead * prod f_i^{m_i}, each f_i monic squarefree, pairwise coprime.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

// p = content * primitive with primitive in Z[var], positive leading coefficient.
Rational primitive_integer(const QPoly& p, std::vector<Integer>& primitive);
QPoly from_integers(const std::vector<Integer>& c);

// Strict total order used for canonical sorting: degree, then coefficients
// from the top down by absolute value, negative before positive.
bool canonical_less(const QPoly& a, const QPoly& b);

}  // namespace ffh
