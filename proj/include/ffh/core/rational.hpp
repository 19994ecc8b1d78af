#pragma once

#include <gmpxx.h>

#include <string>

namespace ffh {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "p/q" text; the denominator is always printed, even when 1.
inline std::string to_pq(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Shortest text: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_short(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parses "p", "-p" or "p/q"; throws InputError on malformed text.
Rational parse_rational(const std::string& text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rpow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil(const Rational& r) { return ceil_div(r.get_num(), r.get_den()); }
inline Integer floor(const Rational& r) { return floor_div(r.get_num(), r.get_den()); }

}  // namespace ffh
