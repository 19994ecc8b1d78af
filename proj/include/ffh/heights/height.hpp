#pragma once

#include <vector>

#include "ffh/core/mpoly.hpp"
#include "ffh/places/place.hpp"

namespace ffh {

// Absolute logarithmic heights over Q(t) and towers above it. Over a
// base of constants (Q and towers over Q) every height is 0.

// Projective point with coordinates in Q(t). Places are grouped by the
// Q-irreducible factors of numerators and denominators plus infinity.
Rational height_point(const std::vector<RatFunc>& coords);
// Projective point over a common field. Towers of depth one over Q(t) go
// through the places of the defining curve; deeper towers are reduced to a
// primitive element first.
Rational height_point(const std::vector<Elem>& coords, const PlaceOptions& opt = {});

// max(deg num, deg den).
Rational height_element(const RatFunc& a);
// Degree ratio of the characteristic polynomial; needs a certified tower.
Rational height_element(const Elem& a);
// Same quantity through the point (1 : a) and place enumeration.
Rational height_element_by_places(const Elem& a, const PlaceOptions& opt = {});

// 0 for a single term, else the height of the coefficient point.
Rational height_polynomial(const MPoly& q, const PlaceOptions& opt = {});
Rational height_polynomial(const UPoly& q, const PlaceOptions& opt = {});

// Element of an ancestor field when v does not involve the generators
// above target_depth.
bool descend(const Field& L, const Value& v, int target_depth, Value& out);

}  // namespace ffh
