#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ffh/core/field.hpp"

namespace ffh {

// Dense univariate polynomial over a Field.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(FieldPtr K) : K_(std::move(K)) {}
  UPoly(FieldPtr K, std::vector<Value> c);
  static UPoly constant(const FieldPtr& K, const Value& v) { return UPoly(K, {v}); }
  static UPoly monomial(const FieldPtr& K, const Value& v, int degree);
  static UPoly variable(const FieldPtr& K) { return monomial(K, K->one(), 1); }
  // Coerces a polynomial over Q into K.
  static UPoly from_qpoly(const FieldPtr& K, const QPoly& p);

  const FieldPtr& field() const { return K_; }
  const std::vector<Value>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Value coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Value{}; }
  const Value& lead() const { return c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b);
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }
  UPoly scale(const Value& s) const;

  UPoly monic() const;
  UPoly derivative() const;
  Value eval(const Value& x) const;
  // p(q(var))
  UPoly compose(const UPoly& q) const;
  // p(var + s)
  UPoly shift(const Value& s) const;
  UPoly pow(unsigned e) const;
  // Embeds into a field having this polynomial's field as an ancestor.
  UPoly lift_to(const FieldPtr& L) const;

  std::string to_string(const std::string& var = "Y") const;

 private:
  FieldPtr K_;
  std::vector<Value> c_;
};

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
UPoly divexact(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly xgcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t);
UPoly squarefree_part(const UPoly& p);
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);
Value resultant(const UPoly& a, const UPoly& b);
Value discriminant(const UPoly& p);

}  // namespace ffh
