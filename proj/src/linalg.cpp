#include "wps/linalg.hpp"

#include <stdexcept>

namespace wps {

RowEchelon row_reduce(DenseMatrix m, std::size_t ncols) {
  for (const auto& r : m)
    if (r.size() != ncols) throw std::invalid_argument("row_reduce: ragged matrix");
  RowEchelon out;
  std::size_t top = 0;
  for (std::size_t c = 0; c < ncols && top < m.size(); ++c) {
    std::size_t p = top;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[top]);
    Rational inv = Rational(1) / m[top][c];
    for (auto& x : m[top]) x = x * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == top || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (!m[top][k].is_zero()) m[r][k] = Rational::mul_sub(m[r][k], f, m[top][k]);
    }
    out.pivots.push_back(c);
    ++top;
  }
  m.resize(top);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(DenseMatrix m, std::size_t ncols) { return row_reduce(std::move(m), ncols).pivots.size(); }

DenseMatrix nullspace(const DenseMatrix& m, std::size_t ncols) {
  auto e = row_reduce(m, ncols);
  std::vector<bool> pivot(ncols, false);
  for (auto c : e.pivots) pivot[c] = true;
  DenseMatrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (pivot[f]) continue;
    std::vector<Rational> v(ncols);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rows[k][f];
    basis.push_back(std::move(v));
  }
  return row_reduce(std::move(basis), ncols).rows;
}

}  // namespace wps
