#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pvalg/pv_catalog.hpp"
#include "pvalg/random.hpp"
#include "pvalg/report.hpp"
#include "pvalg/smith.hpp"
#include "pvalg/tee.hpp"

namespace pvalg {

/// u_XY(t) = sum_j beta_j t^j with central coefficients, presented over
/// R = Q[r0..rn]; central elements are carried as their Harish-Chandra images.
struct UxyPresentation {
  PVType pv;
  std::vector<Poly> beta;  ///< in r_vars(n)
  UContextPtr context;     ///< U(R, u_XY, n)

  const Poly& u() const { return context->u(); }
};

/// Decomposes gamma(XY) = prod (ri + dn/4) as sum beta_j sigma0^j.
UxyPresentation build_u_xy(const PVType& pv);

/// The map x~ -> X, y~ -> Y, e~ -> E, z -> (0, gamma^-1(z)).
class IsoBridge {
 public:
  explicit IsoBridge(const PVType& pv);

  const TeeContext& tee() const { return tee_; }
  const UxyPresentation& presentation() const { return pres_; }
  const UContextPtr& u_context() const { return pres_.context; }

  /// (0, gamma^-1(z)); throws MembershipFailure unless z is symmetric and tau-invariant.
  TorusElement center_image(const Poly& z) const;
  TorusElement phi(const UElement& el) const;
  /// sum_j center_image(coeffs[j]) E^j, a degree-0 element.
  TorusElement center_series(std::span<const Poly> coeffs) const;
  /// sum_j center_image(alpha_j) E^j for the tau-decomposition of gamma(h), h in T0.
  std::vector<Poly> expand_over_center(const TorusElement& h) const;

  UElement random_element(Rng& rng, int max_weight, int max_e_degree, int terms) const;

 private:
  /// sum_j gamma^-1(coeffs[j])(X0 + m) b_E^j; a null entry is zero.
  Poly shifted_series(std::span<const Poly> coeffs, int m) const;

  TeeContext tee_;
  UxyPresentation pres_;
};

/// Relation, homomorphism and injectivity checks; stops at the first failure.
SuiteReport verify_iso(const PVType& pv, int trials, std::uint64_t seed, int probe_degree = 3);

}  // namespace pvalg
