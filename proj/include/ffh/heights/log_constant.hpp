#pragma once

#include <string>

#include "ffh/core/rational.hpp"

namespace ffh {

// coeff * base^exponent * scale, kept symbolic because the bound constants
// have millions of digits. The exponent may be a non-integral rational.
struct LogConstant {
  Rational coeff = 0;  // >= 0
  Integer base = 2;    // >= 2
  Rational exponent = 0;
  Rational scale = 0;  // >= 0, usually a height

  static LogConstant exact(const Rational& r);
  bool is_zero() const { return coeff == 0 || scale == 0; }
  std::string exponent_text() const;
  std::string to_string() const;
};

// Sign of r - c, decided with integer logarithm bounds and exact powers
// only when the bounds are inconclusive.
int compare(const Rational& r, const LogConstant& c);
inline bool leq(const Rational& r, const LogConstant& c) { return compare(r, c) <= 0; }

}  // namespace ffh
