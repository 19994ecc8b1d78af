#include "ffh/heights/log_constant.hpp"

#include "ffh/core/error.hpp"

namespace ffh {

namespace {

long bits(const Integer& a) { return static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)); }

unsigned long to_ulong_checked(const Integer& a) {
  if (!a.fits_ulong_p()) throw UnsupportedError("exponent too large for an exact comparison");
  return a.get_ui();
}

}  // namespace

LogConstant LogConstant::exact(const Rational& r) {
  if (r < 0) throw InputError("negative bound");
  LogConstant c;
  c.coeff = r;
  c.scale = 1;
  return c;
}

std::string LogConstant::exponent_text() const { return to_short(exponent); }

std::string LogConstant::to_string() const {
  if (is_zero()) return "0";
  return to_short(coeff) + " * " + base.get_str() + "^(" + exponent_text() + ") * " + to_short(scale);
}

int compare(const Rational& r, const LogConstant& c) {
  if (c.coeff < 0 || c.scale < 0 || c.base < 2) throw InputError("malformed log constant");
  if (c.is_zero()) return sgn(r);
  if (r <= 0) return -1;
  Rational x = r / (c.coeff * c.scale);
  const Integer& p = c.exponent.get_num();
  const Integer& q = c.exponent.get_den();
  // log2 x in [lo, hi], log2 base in [blo, blo + 1].
  const long lo = bits(x.get_num()) - 1 - bits(x.get_den());
  const long hi = bits(x.get_num()) - bits(x.get_den()) + 1;
  const long blo = bits(c.base) - 1;
  // Compare q*log2 x with p*log2 base.
  const Integer qlo = q * lo, qhi = q * hi;
  const Integer plo = p >= 0 ? p * blo : p * (blo + 1);
  const Integer phi = p >= 0 ? p * (blo + 1) : p * blo;
  if (qhi < plo) return -1;
  if (qlo > phi) return 1;
  // Inconclusive: both sides have comparable size, so exact powers are cheap.
  const unsigned long qe = to_ulong_checked(q);
  Rational lhs = rpow(x, qe);
  Integer bp = ipow(c.base, to_ulong_checked(abs(p)));
  if (p >= 0) return cmp(lhs, Rational(bp)) < 0 ? -1 : (lhs == bp ? 0 : 1);
  lhs *= bp;
  return cmp(lhs, Rational(1)) < 0 ? -1 : (lhs == 1 ? 0 : 1);
}

}  // namespace ffh
