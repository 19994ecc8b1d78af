#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "ffh/core/ratfunc.hpp"

namespace ffh {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Raw element of a field of the given depth. At depth 0 only `base` is
// meaningful. At depth d > 0, `c` lists the coefficients (depth d-1) of the
// reduced representative in the top generator, without trailing zeros.
struct Value {
  RatFunc base;
  std::vector<Value> c;
};

enum class Irreducibility { Certified, Assumed };

// Q, Q(t), or a simple extension of another Field by a monic polynomial.
// Fields are immutable; all arithmetic is const and thread-safe.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr rationals();
  static FieldPtr rational_functions();
  // Unchecked extension; see extend_field for the certified entry point.
  static FieldPtr adjoin(const FieldPtr& parent, std::vector<Value> monic_modulus, std::string symbol,
                         Irreducibility status);

  bool is_base() const { return depth_ == 0; }
  bool has_t() const { return has_t_; }
  int depth() const { return depth_; }
  const FieldPtr& parent() const { return parent_; }
  FieldPtr base() const;
  // Ancestor at the given depth (0 = base, depth() = this).
  FieldPtr ancestor(int depth) const;
  bool is_ancestor_of(const Field& other) const;
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  int total_degree() const { return total_degree_; }
  const std::vector<Value>& modulus() const { return modulus_; }
  const std::string& symbol() const { return symbol_; }
  Irreducibility status() const { return status_; }
  // True when every level is certified irreducible.
  bool certified() const;
  std::string describe() const;

  Value zero() const;
  Value one() const { return from_rational(1); }
  Value from_rational(const Rational& r) const;
  Value from_ratfunc(const RatFunc& r) const;
  Value generator() const;
  // Embeds an element of an ancestor field.
  Value lift(const Value& v, int from_depth) const;

  bool is_zero(const Value& v) const;
  bool is_one(const Value& v) const;
  bool eq(const Value& a, const Value& b) const;
  // True when v lies in the base field; stores it in out.
  bool in_base(const Value& v, RatFunc* out = nullptr) const;
  bool is_rational(const Value& v, Rational* out = nullptr) const;

  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  Value mul(const Value& a, const Value& b) const;
  Value mul_base(const Value& a, const RatFunc& s) const;
  Value inv(const Value& a) const;
  Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }
  Value pow(const Value& a, long e) const;

  // Coordinates over the base field in the power basis of the tower
  // (top generator most significant); length total_degree().
  std::vector<RatFunc> coordinates(const Value& v) const;
  Value from_coordinates(const std::vector<RatFunc>& c) const;

  std::string render(const Value& v) const;

 private:
  Field() = default;
  FieldPtr parent_;
  int depth_ = 0;
  bool has_t_ = false;
  std::vector<Value> modulus_{Value{}, Value{RatFunc(1), {}}};
  std::string symbol_;
  Irreducibility status_ = Irreducibility::Certified;
  int total_degree_ = 1;
};

// Field element with its field attached; convenience layer over Value.
class Elem {
 public:
  Elem() = default;
  Elem(FieldPtr f, Value v) : f_(std::move(f)), v_(std::move(v)) {}
  static Elem rational(const FieldPtr& f, const Rational& r) { return Elem(f, f->from_rational(r)); }

  const FieldPtr& field() const { return f_; }
  const Value& value() const { return v_; }
  bool is_zero() const { return f_->is_zero(v_); }
  bool is_one() const { return f_->is_one(v_); }

  Elem operator-() const { return Elem(f_, f_->neg(v_)); }
  friend Elem operator+(const Elem& a, const Elem& b) { return Elem(a.f_, a.f_->add(a.v_, b.v_)); }
  friend Elem operator-(const Elem& a, const Elem& b) { return Elem(a.f_, a.f_->sub(a.v_, b.v_)); }
  friend Elem operator*(const Elem& a, const Elem& b) { return Elem(a.f_, a.f_->mul(a.v_, b.v_)); }
  friend Elem operator/(const Elem& a, const Elem& b) { return Elem(a.f_, a.f_->div(a.v_, b.v_)); }
  friend bool operator==(const Elem& a, const Elem& b) { return a.f_->eq(a.v_, b.v_); }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
  Elem inverse() const { return Elem(f_, f_->inv(v_)); }
  Elem pow(long e) const { return Elem(f_, f_->pow(v_, e)); }
  std::string to_string() const { return f_->render(v_); }

 private:
  FieldPtr f_;
  Value v_;
};

std::ostream& operator<<(std::ostream& os, const Elem& e);

// Polynomial kernels over a field, on coefficient vectors without trailing
// zeros. Used by the tower arithmetic itself and by UPoly.
namespace vpoly {
using VPoly = std::vector<Value>;
void trim(const Field& K, VPoly& a);
VPoly add(const Field& K, const VPoly& a, const VPoly& b);
VPoly sub(const Field& K, const VPoly& a, const VPoly& b);
VPoly mul(const Field& K, const VPoly& a, const VPoly& b);
VPoly scale(const Field& K, const VPoly& a, const Value& s);
// Remainder of a by b; the quotient is stored when q is non-null.
VPoly rem(const Field& K, VPoly a, const VPoly& b, VPoly* q = nullptr);
VPoly monic(const Field& K, const VPoly& a);
VPoly gcd(const Field& K, VPoly a, VPoly b);
// Monic gcd with s*a + t*b = g.
VPoly xgcd(const Field& K, VPoly a, VPoly b, VPoly& s, VPoly& t);
}  // namespace vpoly

}  // namespace ffh
