#pragma once

#include <cstddef>
#include <vector>

#include "qcoh/algebra/polynomial.hpp"

namespace qcoh {

template <typename F>
using PolyMatrix = std::vector<std::vector<Polynomial<F>>>;

/// Laplace expansion along the first row.
template <typename F>
Polynomial<F> det_cofactor(const PolyMatrix<F>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial<F>::constant(F(1));
  if (n == 1) return m[0][0];
  Polynomial<F> total;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    PolyMatrix<F> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial<F>> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial<F> term = m[0][col] * det_cofactor(minor);
    if (col % 2 == 0) total += term; else total -= term;
  }
  return total;
}

/// Bareiss fraction-free elimination over F[x]. Every intermediate division
/// is exact; a remainder throws InternalInconsistency.
template <typename F>
Polynomial<F> det_bareiss(PolyMatrix<F> m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial<F>::constant(F(1));
  bool negate = false;
  Polynomial<F> prev = Polynomial<F>::constant(F(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = Polynomial<F>();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Copy of m with column col replaced by values.
template <typename F>
PolyMatrix<F> replace_column(PolyMatrix<F> m, std::size_t col, const std::vector<Polynomial<F>>& values) {
  for (std::size_t r = 0; r < m.size(); ++r) m[r][col] = values.at(r);
  return m;
}

}  // namespace qcoh
