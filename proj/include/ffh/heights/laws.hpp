#pragma once

#include <array>
#include <string>
#include <vector>

#include "ffh/heights/height.hpp"

namespace ffh {

struct HeightLawReport {
  std::string law;
  std::string inputs;
  Rational lhs, rhs;
  std::string relation;  // "=" or "<="
  bool satisfied = false;
};

HeightLawReport make_report(std::string law, std::string inputs, const Rational& lhs, const std::string& relation,
                            const Rational& rhs);

// Law identifiers accepted by the CLI, in a fixed order.
const std::vector<std::string>& law_ids();

// h(a^n) = h(a^-n) = n h(a).
HeightLawReport law_power(const Elem& a, long n);
// h(Phi(a_1, ..., a_r)) <= sum d_i h(a_i) + h(Phi). The components use the
// block coordinates in order as variables; multihomogeneity is checked.
HeightLawReport law_morphism(const std::vector<std::vector<Elem>>& blocks, const std::vector<MPoly>& phi);
// h(Q(b)) <= sum deg(Q, X_i) h(b_i) for Q with rational coefficients.
HeightLawReport law_polynomial_value(const MPoly& q, const std::vector<Elem>& b);
HeightLawReport law_sum(const Elem& a, const Elem& b);
HeightLawReport law_product(const Elem& a, const Elem& b);
// h((c1 a + c2)/(c3 a + c4)) = h(a) when c1 c4 - c2 c3 != 0.
HeightLawReport law_mobius(const Elem& a, const std::array<Rational, 4>& c);
// Points are rescaled so their first coordinate is 1.
HeightLawReport law_concatenation(const std::vector<Elem>& b1, const std::vector<Elem>& b2);
HeightLawReport law_coordinate_sum(const std::vector<Elem>& b);
// Polynomials share their variables; the resultant is taken in `var`.
HeightLawReport law_resultant(const MPoly& p1, const MPoly& p2, const std::string& var = "Y");
// P in X, Y.
HeightLawReport law_shift(const MPoly& p, const Elem& a, const Elem& b);
HeightLawReport law_divisibility(const MPoly& g, const MPoly& h);
// H univariate with H(a) = 0.
HeightLawReport law_root(const UPoly& h, const Elem& a);
// All monomials of degree d in the coordinates of a.
HeightLawReport law_veronese(const std::vector<Elem>& a, int d);
// h(GH) = h(G) + h(H).
HeightLawReport law_polynomial_product(const MPoly& g, const MPoly& h);

// q(alpha, beta) = 0 with q in X, Y. Reports h(beta) <= h(alpha) + h(q)
// when deg(q, Y) = tdeg(q), and the two-sided bound
// n h(beta) - mn h(q) <= m h(alpha) <= n h(beta) + mn h(q) when every term
// X^i Y^j has m j + n i <= mn. InputError when neither hypothesis holds or
// the point is not on the curve.
std::vector<HeightLawReport> special_curve_check(const MPoly& q, const Elem& alpha, const Elem& beta);

// Helpers shared with other modules.
Value evaluate(const MPoly& p, const FieldPtr& L, const std::vector<Value>& point);
std::vector<Exponents> monomials_of_degree(int nvars, int d);

}  // namespace ffh
