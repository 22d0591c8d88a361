#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pvalg/poly.hpp"
#include "pvalg/pv_catalog.hpp"
#include "pvalg/random.hpp"
#include "pvalg/tee.hpp"

namespace pvalg {

/// Context r0..rn for Harish-Chandra images.
VarsPtr r_vars(int n);

/// rho_i = (d/4)(2i - n), i = 0..n.
std::vector<Rational> rho_vector(int n, const Rational& d);

/// a0 = r0, ai = ri - r_{i-1}.
Poly a_to_r(const Poly& p);
/// ri = a0 + ... + ai.
Poly r_to_a(const Poly& p);

/// r-polynomial with its symmetry predicates evaluated once.
class SymPoly {
 public:
  explicit SymPoly(Poly p);
  int n() const { return static_cast<int>(poly_.vars()->size()) - 1; }
  const Poly& poly() const { return poly_; }
  bool is_symmetric() const { return symmetric_; }
  bool is_tau_invariant() const { return tau_invariant_; }

 private:
  Poly poly_;
  bool symmetric_;
  bool tau_invariant_;
};

/// gamma(b)(r) = b(a(r - rho)); throws NotSymmetric when p != 0 or the result is not symmetric.
Poly gamma(const BFunction& b, const PVType& pv);
/// Same transform without the symmetry check.
Poly gamma_raw(const Poly& a_poly, const PVType& pv);
/// Inverse transform z -> z(r(a) + rho), as an a-variable polynomial.
Poly gamma_inverse(const Poly& r_poly, const PVType& pv);

/// Invariance under every adjacent transposition r_i <-> r_{i+1}.
bool is_symmetric(const Poly& r_poly);
bool is_tau_invariant(const Poly& r_poly);
/// All ri -> ri + times.
Poly tau_shift(const Poly& r_poly, int times = 1);
/// sigma0 = r0 + ... + rn.
Poly sigma0(int n);

/// alpha_0..alpha_p, each symmetric and tau-invariant, with s = sum alpha_i sigma0^i.
/// Throws NotSymmetric.
std::vector<Poly> decompose_tau(const Poly& s);
/// Nonzero (alpha_i, i) pairs of decompose_tau over all generators.
std::vector<std::pair<Poly, int>> tau_invariant_generators(std::span<const Poly> gens);

struct CenterSplit {
  Poly z;     ///< tau-invariant component
  Poly rest;  ///< multiple of sigma0
};
CenterSplit center_split(const BFunction& b, const PVType& pv);

/// Sum over all permutations of r0..rn.
Poly symmetrize(const Poly& r_poly);
/// Random symmetric tau-invariant polynomial of degree <= max_degree.
Poly random_central(Rng& rng, int n, int max_degree);

/// Determinant of the Jacobian of fs with respect to all variables at a point.
Rational jacobian_determinant(std::span<const Poly> fs, std::span<const Rational> point);

}  // namespace pvalg
