#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ffh/core/parser.hpp"
#include "ffh/places/curve.hpp"
#include "ffh/places/series.hpp"

namespace ffh {

struct PlaceOptions {
  int tower_budget = 16;  // max degree of a place's coefficient field over the curve field
  long precision = 16;    // initial number of known y-coefficients
  long ceiling = 4096;    // precision limit for order computations
};

// Conjugacy class of centers: x = infinity, or x = a root of an
// irreducible monic polynomial over the curve field.
struct Center {
  bool infinite = false;
  UPoly poly;

  static Center at_infinity() { return Center{true, UPoly()}; }
  static Center at(const FieldPtr& K, const Value& a);
  // Checks irreducibility of m (InputError when reducible).
  static Center root_of(const UPoly& m);
  // Parses "inf", an element of the curve field, or a polynomial in X.
  static Center parse(const std::string& text, const FieldPtr& K);
  int degree() const { return infinite ? 1 : poly.degree(); }
  std::string describe() const;
};

// Normal form data (a + z^mu, z^nu (b_0 + b_1 z + ...)) computed from raw
// exponent/coefficient data; see normalize_parametrization.
struct NormalForm {
  long mu = 0;
  long nu = 0;
  long reduction = 1;  // the gcd that was divided out
  std::vector<Value> b;
};
// Divides out the gcd of mu and the exponents of y and strips leading
// zeros of y. y must have a known nonzero coefficient.
NormalForm normalize_parametrization(long mu, const Laurent& y);

// A place of the curve, represented by one member of its conjugacy class.
// Copies share a lazily extended series cache (internally synchronized).
class Place {
 public:
  struct Impl;
  Place() = default;
  explicit Place(std::shared_ptr<Impl> impl) : d_(std::move(impl)) {}

  const FieldPtr& field() const;
  const Center& center() const;
  bool at_infinity() const;
  const Value& a() const;
  long mu() const;
  long nu() const;
  // Number of places over the algebraic closure this representative stands for.
  long weight() const;
  int branch() const;
  std::string key() const;

  Laurent x_series() const;
  // y with at least `terms` coefficients known from z^nu on.
  Laurent y_series(long terms) const;
  std::vector<Value> coefficients(long terms) const;
  long cached_terms() const;

 private:
  std::shared_ptr<Impl> d_;
};

std::vector<Place> places_above(const CurveModel& c, const Center& center, const PlaceOptions& opt = {});

// Irreducible factors of a polynomial in X as centers (plus infinity when asked).
std::vector<Center> centers_of(const UPoly& r, bool with_infinity);
// Sum over the places of |mu| * weight, divided by the center degree.
long ramification_sum(const std::vector<Place>& places);

// Values of a polynomial G(X, Y) along the place. `terms` is the relative
// precision used for y.
Laurent evaluate_at(const Place& p, const MPoly& G, long terms);
// Order at the place of a polynomial, resp. a quotient of polynomials.
// InputError when the function vanishes on the curve, PrecisionError when
// the ceiling is hit.
long ord_at(const CurveModel& c, const Place& p, const MPoly& G, const PlaceOptions& opt = {});
long ord_at(const CurveModel& c, const Place& p, const Fraction& f, const PlaceOptions& opt = {});

// Formal sum of places, keyed by Place::key(). Multiplicities apply to
// every conjugate, so degree and delta are weighted.
class Divisor {
 public:
  struct Entry {
    Place place;
    long mult = 0;
  };
  void add(const Place& p, long mult);
  long mult(const std::string& key) const;
  bool is_zero() const { return e_.empty(); }
  long degree() const;
  long delta() const;
  const std::map<std::string, Entry>& entries() const { return e_; }
  // Parts with positive coefficients: D = D+ - D-.
  Divisor positive() const;
  Divisor negative() const;
  Divisor scaled(long k) const;
  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + b.scaled(-1); }
  std::string to_string() const;

 private:
  std::map<std::string, Entry> e_;
};

// Centers where a function given as num/den can have zeros or poles.
std::vector<Center> critical_centers(const CurveModel& c, const std::vector<MPoly>& polys);
Divisor principal_divisor(const CurveModel& c, const Fraction& f, const PlaceOptions& opt = {});

struct MonomialExpansion {
  long l = 0, j = 0;
  long leading = 0;       // exponent of the first nonzero coefficient
  long series_offset = 0;  // j*nu at finite centers, j*nu + l*mu at infinity
  Laurent series;         // x^l y^j along the place
  std::vector<Value> beta;  // coefficients of z^(series_offset + s), s = 0, 1, ...
};
MonomialExpansion expand_monomial(const Place& p, long l, long j, long terms);

}  // namespace ffh
