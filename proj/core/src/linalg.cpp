#include "cmsym/linalg.hpp"

namespace cmsym {

std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& a) {
  std::size_t n = a.size();
  Matrix<Rational> m = a, inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational f = 1 / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational g = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= g * m[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix<Frac>& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    Frac inv = m[row][col].inverse();
    for (std::size_t j = col; j < columns; ++j)
      if (!m[row][j].is_zero()) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Frac g = m[r][col];
      for (std::size_t j = col; j < columns; ++j)
        if (!m[row][j].is_zero()) m[r][j] -= g * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Frac>> nullspace(const Matrix<Frac>& a, std::size_t columns) {
  Matrix<Frac> m = a;
  auto pivots = rref(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Frac>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Frac> v(columns);
    v[free] = Frac(1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(Matrix<Frac> rows) {
  if (rows.empty()) return 0;
  std::size_t columns = rows.front().size();
  return rref(rows, columns).size();
}

bool in_span(const Matrix<Frac>& rows, const std::vector<Frac>& v) {
  bool zero = true;
  for (const auto& x : v)
    if (!x.is_zero()) zero = false;
  if (zero) return true;
  if (rows.empty()) return false;
  Matrix<Frac> extended = rows;
  extended.push_back(v);
  return rank(rows) == rank(extended);
}

}  // namespace cmsym
