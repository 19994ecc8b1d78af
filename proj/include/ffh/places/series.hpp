#pragma once

#include <climits>
#include <string>
#include <vector>

#include "ffh/core/field.hpp"

namespace ffh {

// Truncated Laurent series sum c[i] z^(val+i) over a Field, known modulo
// z^prec. Exact (polynomial) series carry prec = kExact.
struct Laurent {
  static constexpr long kExact = LONG_MAX / 4;

  FieldPtr K;
  long val = 0;
  std::vector<Value> c;
  long prec = kExact;

  Laurent() = default;
  explicit Laurent(FieldPtr f) : K(std::move(f)) {}
  static Laurent monomial(const FieldPtr& K, const Value& v, long e);
  static Laurent constant(const FieldPtr& K, const Value& v) { return monomial(K, v, 0); }

  bool exact() const { return prec >= kExact; }
  // No known nonzero coefficient.
  bool known_zero() const { return c.empty(); }
  // Exponent of the first nonzero coefficient; prec when none is known.
  long order() const { return c.empty() ? prec : val; }
  Value coeff(long e) const;

  // Drops leading zeros and everything at or above prec.
  void normalize();
  Laurent truncated(long p) const;
  Laurent lift_to(const FieldPtr& L) const;
  std::string to_string(const std::string& var = "z") const;
};

Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a);
Laurent scale(const Laurent& a, const Value& s);
Laurent pow(const Laurent& a, unsigned e);

}  // namespace ffh
