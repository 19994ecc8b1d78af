#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ffh/core/upoly.hpp"

namespace ffh {

struct FieldFactorization {
  Value unit;
  std::vector<std::pair<UPoly, int>> factors;  // monic irreducible over p.field()
};

// Complete factorization over the coefficient field of p: Q (modular
// methods), Q(t) (specialization and t-adic lifting), or a tower (norms).
// Throws UnsupportedError when a degree cap is exceeded.
FieldFactorization factor(const UPoly& p);
// Irreducible factors of a squarefree polynomial, monic, in a fixed order.
std::vector<UPoly> irreducible_factors(const UPoly& p);

enum class IrreducibilityStatus { Irreducible, Reducible, Unknown };
const char* to_string(IrreducibilityStatus s);
IrreducibilityStatus irreducibility_check(const UPoly& m);

// Adjoins a root of m. Reducible m is rejected; when certification fails
// the level is marked assumed if allow_assumed, otherwise UnsupportedError.
FieldPtr extend_field(const FieldPtr& f, const UPoly& m, bool allow_assumed = false);

// Characteristic polynomial of multiplication by e over the base field.
UPoly charpoly(const Elem& e);
// Minimal polynomial over the base field (squarefree part of the charpoly).
UPoly minimal_polynomial(const Elem& e);
// Degree ratio deg_t / deg_Y of the cleared, t-primitive charpoly.
Rational height_tower_element(const Elem& e);
// Height of an element of Q(t): max(deg num, deg den).
Rational height_ratfunc(const RatFunc& a);

// Clears denominators of a polynomial over Q(t) and removes the t-content:
// entry i is the Q[t] coefficient of Y^i.
std::vector<QPoly> clear_to_primitive(const UPoly& p);

}  // namespace ffh
