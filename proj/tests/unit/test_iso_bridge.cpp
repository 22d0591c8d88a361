#include "doctest.h"
#include "pvalg/errors.hpp"
#include "pvalg/iso_bridge.hpp"
#include "pvalg/random.hpp"
#include "pvalg/sym_harish.hpp"

using namespace pvalg;

TEST_CASE("u_XY reassembles gamma(XY) from powers of sigma0") {
  for (const PVType& pv : {builtin(Family::A, 2), builtin(Family::C, 3), builtin(Family::B, 4)}) {
    const UxyPresentation pres = build_u_xy(pv);
    const VarsPtr rv = r_vars(pv.n);
    Poly sum(rv), expected = Poly::constant(rv, 1), power = Poly::constant(rv, 1);
    for (const Poly& b : pres.beta) {
      sum += b * power;
      power *= sigma0(pv.n);
    }
    for (int i = 0; i <= pv.n; ++i)
      expected *= Poly::variable(rv, static_cast<std::size_t>(i)) +
                  Poly::constant(rv, pv.d * Rational(pv.n, 4));
    CHECK(sum == expected);
  }
}

TEST_CASE("phi sends generators to X, Y, E and central ring elements to the center") {
  const IsoBridge bridge(builtin(Family::A, 3));
  const UContextPtr u = bridge.u_context();
  CHECK(bridge.phi(UElement::x(u)) == bridge.tee().X());
  CHECK(bridge.phi(UElement::y(u)) == bridge.tee().Y());
  CHECK(bridge.phi(UElement::e(u)) == bridge.tee().E());
  CHECK_THROWS_AS(bridge.center_image(sigma0(2)), MembershipFailure);
  Rng rng(3);
  for (int i = 0; i < 5; ++i) {
    const Poly z = random_central(rng, 2, 4);
    const TorusElement image = bridge.phi(UElement::term(u, 0, u->ring().lift(z)));
    CHECK(image == bridge.center_image(z));
    CHECK(commutator(image, bridge.tee().X()).is_zero());
    CHECK(commutator(image, bridge.tee().Y()).is_zero());
  }
}

TEST_CASE("phi respects the defining relation xy = u(e)") {
  const IsoBridge bridge(builtin(Family::C, 2));
  const UContextPtr u = bridge.u_context();
  const UElement xy = UElement::x(u) * UElement::y(u);
  CHECK(bridge.phi(xy) == bridge.tee().X() * bridge.tee().Y());
  const UElement yx = UElement::y(u) * UElement::x(u);
  CHECK(bridge.phi(yx) == bridge.tee().Y() * bridge.tee().X());
}

TEST_CASE("phi is multiplicative on random elements") {
  const IsoBridge bridge(builtin(Family::A, 2));
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    const UElement a = bridge.random_element(rng, 2, 2, 3);
    const UElement b = bridge.random_element(rng, 2, 2, 3);
    CHECK(bridge.phi(a * b) == bridge.phi(a) * bridge.phi(b));
  }
}

TEST_CASE("center_image rejects non-invariant polynomials") {
  const IsoBridge bridge(builtin(Family::A, 3));
  const VarsPtr rv = r_vars(2);
  CHECK_THROWS_AS(bridge.center_image(Poly::variable(rv, 0)), MembershipFailure);
}

TEST_CASE("degree-0 elements expand over the center") {
  const IsoBridge bridge(builtin(Family::A, 2));
  const TorusElement h = bridge.tee().X() * bridge.tee().Y() * bridge.tee().E();
  CHECK(bridge.center_series(bridge.expand_over_center(h)) == h);
}

TEST_CASE("verify_iso passes on a non-determinant entry") {
  const SuiteReport r = verify_iso(builtin(Family::B, 4), 10, 11);
  CHECK(r.first_failure() == nullptr);
}
