#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ffh/core/error.hpp"
#include "ffh/heights/log_constant.hpp"
#include "ffh/places/place.hpp"

namespace ffh {

// The linear system has only the zero solution for every candidate; this
// is a legitimate answer when L(D) = 0.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

struct DivisorContext {
  CurveModel curve;
  Divisor D;
  long delta = 0;     // sum of |d_p| over all conjugates
  int rho = 0;
  long exponent = 0;  // rho (rho + delta)
  // q_D as monic irreducible factors over the curve field with exponents.
  std::vector<std::pair<UPoly, long>> qD;
  std::vector<Place> U;  // sorted by key
  Rational hP, hD;
  PlaceOptions opt;

  UPoly qD_poly() const;
  long qD_degree() const;
  bool in_U(const std::string& key) const;
};

// Needs a nonzero divisor on a curve over Q or Q(t).
DivisorContext divisor_context(const CurveModel& c, const Divisor& D, const PlaceOptions& opt = {});

// Height of a root of the irreducible polynomial f over Q or Q(t).
Rational root_height(const UPoly& f);

enum class RRMode { Faithful, Fallback };
const char* to_string(RRMode m);

struct BoundCheck {
  std::string name;
  std::string bound;   // LogConstant or exact rational text
  Rational actual;
  std::string status;  // satisfied | violated | not-applicable | not-computable
};

struct RROptions {
  RRMode mode = RRMode::Faithful;
  long extra_terms = 0;      // more series terms than the equations need
  long max_unknowns = 1200;  // UnsupportedError beyond this
};

struct RRElement {
  RRMode mode = RRMode::Faithful;
  UPoly q;                             // monic, in X
  std::vector<long> q_exponents;       // exponent of each factor of q_D in q
  long ansatz = 0;                     // l ranges over 0..ansatz-1
  std::vector<std::vector<Value>> a;   // a[l][j]
  MPoly g;                             // sum a_{l,j} X^l Y^j
  Rational height_a;
  bool heights_computable = true;
  int rank = 0, unknowns = 0, equations = 0;
  Rational kappa;                      // max height of the system entries
  std::vector<BoundCheck> checks;

  Fraction z() const;
};

RRElement rr_element(const DivisorContext& ctx, const RROptions& opt = {});

struct MembershipEntry {
  std::string key;
  long ord = 0, mult = 0;
  bool ok = true;
};
struct MembershipCertificate {
  bool member = true;
  std::vector<MembershipEntry> entries;
  std::string structural;
};

// divs(z) + D >= 0, checked on supp(divs(z)) together with supp(D) and the
// extra places given.
MembershipCertificate verify_membership(const CurveModel& c, const Divisor& D, const Fraction& z,
                                        const std::vector<Place>& extra = {}, const PlaceOptions& opt = {});

enum class Against { X, Y };

struct MinimalPolynomialResult {
  MPoly Q;          // in {X, Z} or {Y, Z}, leading coefficient 1
  MPoly resultant;  // in {X, Y, Z}
  bool divides_resultant = false;
  bool annihilates = false;
  Rational height;
  bool heights_computable = true;
};

// Nonzero Q with Q(x, z) = 0 (resp. Q(y, z) = 0) of least Z-degree, then
// least degree in the other variable.
MinimalPolynomialResult minimal_polynomial(const CurveModel& c, const Fraction& z, Against against);

// h(Q) <= 1600 (rho+delta)^6 (rho+1)^(5 (rho+delta)^3 - 9) hD.
BoundCheck minimal_polynomial_bound(const DivisorContext& ctx, const MinimalPolynomialResult& r);
LogConstant rr_height_constant(const DivisorContext& ctx, long exponent_shift);

}  // namespace ffh
