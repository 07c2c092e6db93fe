#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

// Fraction-free (Bareiss) determinant over an integral domain.  Every
// division performed is by a previous pivot and is exact: the intermediate
// entries are minors of the input matrix, hence ring elements.
//
// The entry type E must provide: is_zero(), operator*, operator-,
// unary operator-, and exact_div(const E&).

namespace chowla2 {

template <class E>
E bareiss_det(std::vector<std::vector<E>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("bareiss_det: empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("bareiss_det: matrix not square");
  if (n == 1) return m[0][0];

  bool negate = false;
  const E* prev = nullptr;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    std::size_t piv = j;
    while (piv < n && m[piv][j].is_zero()) ++piv;
    if (piv == n) return m[0][0] - m[0][0];  // singular: zero determinant
    if (piv != j) {
      std::swap(m[piv], m[j]);
      negate = !negate;
    }
    for (std::size_t i = j + 1; i < n; ++i) {
      for (std::size_t l = j + 1; l < n; ++l) {
        E t = m[j][j] * m[i][l] - m[i][j] * m[j][l];
        m[i][l] = prev ? t.exact_div(*prev) : std::move(t);
      }
    }
    prev = &m[j][j];
  }
  E det = std::move(m[n - 1][n - 1]);
  return negate ? -det : det;
}

/// Sylvester matrix rows for Res(a, b), built from ascending coefficient
/// sequences (a of degree da, b of degree db, both >= 0); determinant of the
/// returned (da+db) x (da+db) matrix is the resultant.
template <class E>
std::vector<std::vector<E>> sylvester_matrix(const std::vector<E>& a, int da,
                                             const std::vector<E>& b, int db,
                                             const E& zero) {
  const int n = da + db;
  std::vector<std::vector<E>> m(n, std::vector<E>(n, zero));
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i) m[r][r + (da - i)] = a[i];
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i) m[db + r][r + (db - i)] = b[i];
  return m;
}

}  // namespace chowla2
