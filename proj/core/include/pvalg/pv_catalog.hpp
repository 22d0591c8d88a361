#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pvalg/rational.hpp"

namespace pvalg {

enum class Family { A, B, C, D1, D2, E7, Custom };

/// Numeric data of a regular prehomogeneous space of commutative parabolic type.
/// Invariant: d/2 = (k - (n+1)) / (n(n+1)) when n >= 1; d = 0 when n = 0.
struct PVType {
  Family family = Family::Custom;
  int size = 0;  ///< family size parameter (matrix size, index); 0 for E7
  int n = 0;     ///< rank minus one, degree of the invariant minus one
  int k = 0;     ///< dimension of the space
  Rational d;

  std::string name() const;
  /// Single-line JSON object {"name","family","n","k","d"}.
  std::string to_json() const;

  friend bool operator==(const PVType&, const PVType&) = default;
};

/// Structure constant d for rank n+1 and dimension k (n >= 1).
Rational structure_constant(int n, int k);

/// Catalog rows:
///   A:m   determinant on m x m matrices, n = m-1, k = m^2        (m >= 1)
///   B:m   quadratic form on C^(2m-2)                              (m >= 3)
///   C:m   determinant on symmetric m x m matrices, k = m(m+1)/2   (m >= 1)
///   D1:m  quadratic form on C^(2m-1)                              (m >= 2)
///   E7    n = 2, k = 27
PVType builtin(Family family, int size = 0);
PVType custom(int n, int k);
/// Nondegenerate quadratic form on C^k, k >= 3: n = 1, d = k - 2.
PVType quadratic(int k);

/// Parses "A:3", "B:4", "C:2", "D1:3", "E7", "custom:n:k" or "quadratic:k".
PVType parse_pv(std::string_view selector);

/// Entries exercised by the verification suites.
std::vector<PVType> builtin_entries();

std::string family_name(Family f);

}  // namespace pvalg
