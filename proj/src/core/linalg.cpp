#include "ffh/core/linalg.hpp"

#include "ffh/core/error.hpp"

namespace ffh {

Echelon rref(const Field& K, Matrix A, int ncols) {
  Echelon e;
  std::size_t row = 0;
  for (int col = 0; col < ncols && row < A.size(); ++col) {
    std::size_t piv = row;
    while (piv < A.size() && K.is_zero(A[piv][col])) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[row], A[piv]);
    const Value inv = K.inv(A[row][col]);
    for (int k = col; k < ncols; ++k) A[row][k] = K.mul(A[row][k], inv);
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == row || K.is_zero(A[i][col])) continue;
      const Value f = A[i][col];
      for (int k = col; k < ncols; ++k)
        if (!K.is_zero(A[row][k])) A[i][k] = K.sub(A[i][k], K.mul(f, A[row][k]));
    }
    e.pivots.push_back(col);
    ++row;
  }
  A.resize(row);
  e.R = std::move(A);
  return e;
}

std::vector<std::vector<Value>> kernel_basis(const Field& K, const Matrix& A, int ncols) {
  Echelon e = rref(K, A, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Value>> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Value> x(ncols, K.zero());
    x[f] = K.one();
    for (int r = 0; r < e.rank(); ++r) x[e.pivots[r]] = K.neg(e.R[r][f]);
    out.push_back(std::move(x));
  }
  return out;
}

bool solve(const Field& K, const Matrix& A, const std::vector<Value>& b, std::vector<Value>& x) {
  if (A.size() != b.size()) throw InputError("solve: dimension mismatch");
  const int n = A.empty() ? 0 : static_cast<int>(A[0].size());
  Matrix aug = A;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = rref(K, std::move(aug), n + 1);
  x.assign(n, K.zero());
  for (int r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == n) return false;
    x[e.pivots[r]] = e.R[r][n];
  }
  return true;
}

Value determinant(const Field& K, Matrix A) {
  const std::size_t n = A.size();
  Value det = K.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && K.is_zero(A[piv][col])) ++piv;
    if (piv == n) return K.zero();
    if (piv != col) {
      std::swap(A[piv], A[col]);
      det = K.neg(det);
    }
    det = K.mul(det, A[col][col]);
    const Value inv = K.inv(A[col][col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (K.is_zero(A[i][col])) continue;
      const Value f = K.mul(A[i][col], inv);
      for (std::size_t k = col; k < n; ++k) A[i][k] = K.sub(A[i][k], K.mul(f, A[col][k]));
    }
  }
  return det;
}

}  // namespace ffh
