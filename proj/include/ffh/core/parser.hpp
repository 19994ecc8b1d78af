#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ffh/core/mpoly.hpp"

namespace ffh {

// Expression tree produced by the parser. Interpretation into a concrete
// ring happens separately so one grammar serves every input kind.
struct Expr {
  enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  std::size_t offset = 0;
  Rational number;
  std::string symbol;
  long exponent = 0;
  std::vector<std::shared_ptr<const Expr>> kids;
};
using ExprPtr = std::shared_ptr<const Expr>;

// Grammar: sums and differences of products and quotients of powers of
// numbers, symbols and parenthesized expressions. Throws SyntaxError.
ExprPtr parse_expression(const std::string& text);

// Quotient of two polynomials, not reduced.
struct Fraction {
  MPoly num, den;
};

// Interpretations. `t` maps to the transcendental of Q(t), `uK` to the
// generator of depth K of the field, other symbols to polynomial variables.
RatFunc to_ratfunc(const ExprPtr& e);
MPoly to_mpoly(const ExprPtr& e, const FieldPtr& K, const std::vector<std::string>& vars);
Fraction to_fraction(const ExprPtr& e, const FieldPtr& K, const std::vector<std::string>& vars);
Elem to_elem(const ExprPtr& e, const FieldPtr& K);

RatFunc parse_ratfunc(const std::string& text);
MPoly parse_mpoly(const std::string& text, const FieldPtr& K, const std::vector<std::string>& vars);
Elem parse_elem(const std::string& text, const FieldPtr& K);

// Smallest base field (Q or Q(t)) in which the text makes sense.
FieldPtr natural_base(const ExprPtr& e);
bool mentions_symbol(const ExprPtr& e, const std::string& name);

}  // namespace ffh
