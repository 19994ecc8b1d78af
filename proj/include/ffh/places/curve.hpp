#pragma once

#include <string>
#include <vector>

#include "ffh/core/mpoly.hpp"
#include "ffh/field/tower.hpp"

namespace ffh {

// Plane curve P(X, Y) = 0 with the data the place and Riemann-Roch code
// keeps asking for.
struct CurveModel {
  MPoly P;  // variables {X, Y}
  FieldPtr K;
  int m = 0;    // deg_X
  int n = 0;    // deg_Y
  int rho = 0;  // total degree
  std::vector<UPoly> A;  // A[i] is the coefficient of Y^(n-i)
  UPoly d;               // discriminant in Y, a polynomial in X
  IrreducibilityStatus irreducible = IrreducibilityStatus::Unknown;

  // Validates P (n >= 1, Y does not divide P, squarefree in Y, not
  // reducible). Unknown irreducibility is kept as "assumed".
  static CurveModel make(const MPoly& P);
  static CurveModel parse(const std::string& text);

  static const std::vector<std::string>& vars();
  std::string to_string() const { return P.to_string(); }
  // Coefficient of Y^j as a polynomial in X.
  const UPoly& coeff_y(int j) const { return A[n - j]; }
};

// Irreducibility of a bivariate polynomial over its coefficient field.
IrreducibilityStatus bivariate_irreducibility(const MPoly& P);

}  // namespace ffh
