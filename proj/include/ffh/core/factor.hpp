#pragma once

#include <utility>
#include <vector>

#include "ffh/core/qpoly.hpp"

namespace ffh {

struct QFactorization {
  Rational unit;  // p = unit * prod factor^mult
  std::vector<std::pair<QPoly, int>> factors;  // monic irreducible, canonical order
};

// Complete factorization over Q: squarefree decomposition, factorization
// modulo a small prime, Hensel lifting and exhaustive recombination.
// Throws InputError for the zero polynomial and UnsupportedError above the
// degree cap.
QFactorization factor_univariate_Q(const QPoly& p, int degree_cap = 64);

// Irreducible factors of a squarefree polynomial (no multiplicities).
std::vector<QPoly> irreducible_factors(const QPoly& p, int degree_cap = 64);

bool is_irreducible_Q(const QPoly& p);

}  // namespace ffh
