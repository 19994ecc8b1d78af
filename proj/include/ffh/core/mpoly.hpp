#pragma once

#include <map>
#include <string>
#include <vector>

#include "ffh/core/upoly.hpp"

namespace ffh {

using Exponents = std::vector<int>;

// Graded lexicographic order, largest first, so map iteration starts at the
// leading term and rendering is canonical.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over a Field with named variables.
class MPoly {
 public:
  using Terms = std::map<Exponents, Value, GradedLexGreater>;

  MPoly() = default;
  MPoly(FieldPtr K, std::vector<std::string> vars) : K_(std::move(K)), vars_(std::move(vars)) {}
  static MPoly constant(const FieldPtr& K, const std::vector<std::string>& vars, const Value& v);
  static MPoly variable(const FieldPtr& K, const std::vector<std::string>& vars, const std::string& name);
  // Embeds a univariate polynomial as a polynomial in vars[var].
  static MPoly from_upoly(const UPoly& p, const std::vector<std::string>& vars, int var);

  const FieldPtr& field() const { return K_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int var_index(const std::string& name) const;  // -1 when absent
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t num_terms() const { return terms_.size(); }
  int degree(int var) const;
  int total_degree() const;
  // Lowest exponent of var among the terms.
  int low_degree(int var) const;
  Value coeff(const Exponents& e) const;
  Value constant_term() const { return coeff(Exponents(vars_.size(), 0)); }
  const Value& lead_coeff() const { return terms_.begin()->second; }

  void add_term(const Exponents& e, const Value& v);

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
  MPoly scale(const Value& s) const;
  MPoly pow(unsigned e) const;

  // Coefficients with respect to vars[var]; entry i multiplies vars[var]^i.
  std::vector<MPoly> coefficients_in(int var) const;
  static MPoly from_coefficients(const std::vector<MPoly>& c, int var);
  MPoly substitute(int var, const MPoly& value) const;
  MPoly eval(int var, const Value& x) const;
  MPoly derivative(int var) const;
  // Multiplies by vars[var]^k (k may be negative when divisible).
  MPoly shift_exponent(int var, int k) const;
  // Requires that only vars[var] occurs.
  UPoly to_upoly(int var) const;
  // Same polynomial viewed in a different (super)set of variables.
  MPoly with_vars(const std::vector<std::string>& vars) const;
  // Embeds coefficients into a field having K as an ancestor.
  MPoly lift_to(const FieldPtr& L) const;

  std::string to_string() const;

 private:
  FieldPtr K_;
  std::vector<std::string> vars_;
  Terms terms_;
};

// Exact division; throws InputError when b does not divide a.
MPoly divexact(const MPoly& a, const MPoly& b);
bool divides(const MPoly& b, const MPoly& a, MPoly* quotient = nullptr);
// Sylvester resultant with respect to vars[var] (fraction-free elimination).
MPoly resultant(const MPoly& a, const MPoly& b, int var);
MPoly discriminant(const MPoly& p, int var);
// Determinant of a square matrix of polynomials (Bareiss).
MPoly determinant(std::vector<std::vector<MPoly>> m);

}  // namespace ffh
