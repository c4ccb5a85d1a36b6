#include "linalg.hpp"

#include "errors.hpp"

namespace coxhyp {

size_t rref_in_place(QMatrix& m) {
  if (m.empty()) return 0;
  size_t rows = m.size();
  size_t cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    Rational inv = m[rank][col].inverse();
    for (size_t c = col; c < cols; ++c) m[rank][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rational factor = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m, size_t ncols) {
  QMatrix r = m;
  for (auto& row : r)
    if (row.size() != ncols) fail(ErrorCode::Internal, "nullspace: ragged matrix");
  size_t rank = rref_in_place(r);

  std::vector<int64_t> pivot_of_col(ncols, -1);
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < rank; ++col) {
    if (!r[row][col].is_zero()) {
      pivot_of_col[col] = static_cast<int64_t>(row);
      ++row;
    }
  }

  std::vector<std::vector<Rational>> basis;
  for (size_t free_col = 0; free_col < ncols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[free_col] = Rational(1);
    for (size_t col = 0; col < ncols; ++col) {
      if (pivot_of_col[col] < 0) continue;
      v[col] = -r[static_cast<size_t>(pivot_of_col[col])][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Polynomial poly_det(const PolyMatrix& m) {
  size_t n = m.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const RingPtr& ring = m[0][0].ring();

  // Recursive expansion along the first column of the submatrix selected by
  // `rows`; the band structure of the matrices here keeps this near-linear.
  std::vector<size_t> rows(n);
  for (size_t i = 0; i < n; ++i) rows[i] = i;

  auto expand = [&](auto&& self, std::vector<size_t>& live, size_t col) -> Polynomial {
    if (live.size() == 1) return m[live[0]][col];
    Polynomial det = Polynomial::zero(ring);
    for (size_t k = 0; k < live.size(); ++k) {
      const Polynomial& entry = m[live[k]][col];
      if (entry.is_zero()) continue;
      std::vector<size_t> rest;
      rest.reserve(live.size() - 1);
      for (size_t j = 0; j < live.size(); ++j)
        if (j != k) rest.push_back(live[j]);
      Polynomial minor = self(self, rest, col + 1);
      Polynomial signed_entry = (k % 2 == 0) ? entry : -entry;
      det = det + signed_entry * minor;
    }
    return det;
  };
  return expand(expand, rows, 0);
}

QMatrix evaluate_matrix(const PolyMatrix& m, const std::vector<Rational>& values) {
  QMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (const auto& p : row) r.push_back(evaluate(p, values));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace coxhyp
