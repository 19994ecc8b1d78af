#pragma once

#include <vector>

#include "ffh/core/field.hpp"

namespace ffh {

// Dense matrices over a Field, row major. Plain Gaussian elimination; the
// fields involved are exact so no pivoting strategy beyond "first nonzero".
using Matrix = std::vector<std::vector<Value>>;

struct Echelon {
  Matrix R;                 // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row of R
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon rref(const Field& K, Matrix A, int ncols);
// Kernel vectors, one per free column f, with entry f equal to 1 and the
// other free entries 0.
std::vector<std::vector<Value>> kernel_basis(const Field& K, const Matrix& A, int ncols);
// Solves A x = b; false when inconsistent. Free variables are set to 0.
bool solve(const Field& K, const Matrix& A, const std::vector<Value>& b, std::vector<Value>& x);
Value determinant(const Field& K, Matrix A);

}  // namespace ffh
