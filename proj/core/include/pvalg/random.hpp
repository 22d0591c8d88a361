#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pvalg/poly.hpp"
#include "pvalg/rational.hpp"

namespace pvalg {

/// Seeded generator for randomized suites; identical seeds give identical streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return uniform_int(0, 1) == 1; }

  /// Numerator in [-bound, bound], denominator in [1, max_den].
  Rational rational(int bound = 5, int max_den = 3) {
    return Rational(uniform_int(-bound, bound), uniform_int(1, max_den));
  }

  Rational nonzero_rational(int bound = 5, int max_den = 3) {
    Rational r;
    do r = rational(bound, max_den);
    while (r.is_zero());
    return r;
  }

  /// Random polynomial with up to `max_terms` terms of total degree <= `max_degree`.
  Poly poly(const VarsPtr& vars, int max_terms, int max_degree) {
    Poly p(vars);
    const int terms = uniform_int(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      Exponents e(vars->size(), 0);
      int budget = uniform_int(0, max_degree);
      while (budget > 0 && !e.empty()) {
        e[static_cast<std::size_t>(uniform_int(0, static_cast<int>(e.size()) - 1))] += 1;
        --budget;
      }
      p += Poly::monomial(vars, e, rational());
    }
    return p;
  }

  Poly nonzero_poly(const VarsPtr& vars, int max_terms, int max_degree) {
    Poly p(vars);
    do p = poly(vars, max_terms, max_degree);
    while (p.is_zero());
    return p;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pvalg
