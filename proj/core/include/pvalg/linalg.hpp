#pragma once

#include <vector>

#include "pvalg/rational.hpp"

namespace pvalg {

using Matrix = std::vector<std::vector<Rational>>;

/// Rank by exact Gaussian elimination.
int matrix_rank(Matrix m);
/// Determinant of a square matrix.
Rational determinant(Matrix m);

}  // namespace pvalg
