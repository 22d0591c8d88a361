#include "pvalg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace pvalg {

namespace {

// Row-reduces in place; returns rank and the sign-adjusted product of pivots.
std::pair<int, Rational> eliminate(Matrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  Rational det(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) {
      det = Rational(0);
      continue;
    }
    if (piv != rank) {
      std::swap(m[piv], m[rank]);
      det = -det;
    }
    det *= m[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return {static_cast<int>(rank), det};
}

}  // namespace

int matrix_rank(Matrix m) { return eliminate(m).first; }

Rational determinant(Matrix m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.empty()) return Rational(1);
  auto [rank, det] = eliminate(m);
  return rank == static_cast<int>(m.size()) ? det : Rational(0);
}

}  // namespace pvalg
