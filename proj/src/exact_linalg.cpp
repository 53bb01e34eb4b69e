#include "pickpoly/exact_linalg.hpp"

namespace pickpoly::mpoly {

std::vector<ExactVector> nullspace(ExactMatrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  for (const auto& row : a)
    if (row.size() != cols) throw DomainError("ragged matrix");

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Prefer the pivot with the fewest limbs to limit coefficient growth.
    std::size_t best = rows;
    std::size_t best_size = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      const auto& v = a[i][c];
      const std::size_t size = mpz_size(v.re().get_num_mpz_t()) + mpz_size(v.re().get_den_mpz_t()) +
                               mpz_size(v.im().get_num_mpz_t()) + mpz_size(v.im().get_den_mpz_t());
      if (best == rows || size < best_size) {
        best = i;
        best_size = size;
      }
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    const GaussRational inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!a[r][j].is_zero()) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const GaussRational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace pickpoly::mpoly
