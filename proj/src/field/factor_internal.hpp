#pragma once

#include <vector>

#include "ffh/core/upoly.hpp"

namespace ffh::detail {

// Monic irreducible factors of a squarefree polynomial over Q(t).
std::vector<UPoly> factor_squarefree_qt(const UPoly& p);

}  // namespace ffh::detail
