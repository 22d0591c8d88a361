#include "doctest.h"
#include "pvalg/errors.hpp"
#include "pvalg/pv_catalog.hpp"
#include "pvalg/random.hpp"
#include "pvalg/sym_harish.hpp"
#include "pvalg/tee.hpp"

using namespace pvalg;

namespace {

Poly rp(int n, const std::string& s) { return Poly::parse(r_vars(n), s); }

std::vector<PVType> small_entries() {
  std::vector<PVType> out;
  for (const PVType& pv : builtin_entries())
    if (pv.n <= 3) out.push_back(pv);
  return out;
}

Poly product_shifted(int n, const Rational& c) {
  Poly p = Poly::constant(r_vars(n), 1);
  for (int i = 0; i <= n; ++i)
    p *= Poly::variable(r_vars(n), static_cast<std::size_t>(i)) + Poly::constant(r_vars(n), c);
  return p;
}

}  // namespace

TEST_CASE("a_to_r examples") {
  for (int n = 0; n <= 3; ++n) {
    const TeeContext ctx(n == 0 ? builtin(Family::A, 1) : custom(n, 2 * n + 3));
    CHECK(a_to_r(bfunction(ctx.E()).poly) == sigma0(n));
  }
  CHECK(a_to_r(Poly::parse(a_vars(2), "a0")) == rp(2, "r0"));
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const Poly p = rng.poly(a_vars(2), 4, 3);
    CHECK(r_to_a(a_to_r(p)) == p);
  }
}

TEST_CASE("gamma examples") {
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    for (int l = 0; l <= pv.n; ++l) {
      const TorusElement dl = ctx.x_power(1 - l) * ctx.Y() * ctx.x_power(l);
      const Rational shift = pv.d / Rational(4) * Rational(pv.n) + Rational(l);
      CHECK(gamma(bfunction(dl), pv) == product_shifted(pv.n, shift));
    }
    CHECK(gamma(bfunction(ctx.E()), pv) == sigma0(pv.n));
    CHECK_THROWS_AS(gamma(bfunction(ctx.Y()), pv), NotSymmetric);
  }
  const PVType pv = builtin(Family::A, 3);
  const TeeContext ctx(pv);
  CHECK_THROWS_AS(gamma(bfunction(TorusElement::part(2, 0, Poly::parse(ctx.vars(), "X1"))), pv),
                  NotSymmetric);
}

TEST_CASE("rho vector") {
  for (const PVType& pv : small_entries()) {
    const auto rho = rho_vector(pv.n, pv.d);
    Rational sum;
    for (std::size_t i = 0; i < rho.size(); ++i) {
      sum += rho[i];
      CHECK(rho[i] == -rho[rho.size() - 1 - i]);
    }
    CHECK(sum.is_zero());
  }
}

TEST_CASE("symmetry and tau examples") {
  CHECK(is_symmetric(sigma0(3)));
  CHECK_FALSE(is_symmetric(rp(1, "r0")));
  CHECK(tau_shift(sigma0(2)) == sigma0(2) + Poly::constant(r_vars(2), 3));
  CHECK(tau_shift(rp(1, "r0-r1")) == rp(1, "r0-r1"));
  CHECK(is_tau_invariant(rp(1, "r0-r1")));
}

TEST_CASE("decompose_tau examples") {
  auto a = decompose_tau(sigma0(2));
  REQUIRE(a.size() == 2);
  CHECK(a[0].is_zero());
  CHECK(a[1] == rp(2, "1"));
  a = decompose_tau(rp(1, "r0^2+r1^2"));
  REQUIRE(a.size() == 3);
  CHECK(a[0] == rp(1, "1/2*(r0-r1)^2"));
  CHECK(a[1].is_zero());
  CHECK(a[2] == rp(1, "1/2"));
  const Poly inv = rp(2, "(r0-r1)^2+(r1-r2)^2+(r0-r2)^2");
  a = decompose_tau(inv);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == inv);
  CHECK_THROWS_AS(decompose_tau(rp(1, "r0")), NotSymmetric);
}

TEST_CASE("tau_invariant_generators examples") {
  const Poly s2 = sigma0(1).pow(2);
  auto g = tau_invariant_generators(std::vector<Poly>{s2});
  REQUIRE(g.size() == 1);
  CHECK(g[0] == std::make_pair(rp(1, "1"), 2));
  g = tau_invariant_generators(std::vector<Poly>{rp(1, "(r0-r1)^2")});
  REQUIRE(g.size() == 1);
  CHECK(g[0] == std::make_pair(rp(1, "(r0-r1)^2"), 0));
  CHECK_THROWS_AS(tau_invariant_generators(std::vector<Poly>{rp(1, "r0-r1")}), NotSymmetric);
  const Poly d2 = rp(1, "(r0-r1)^2");
  g = tau_invariant_generators(std::vector<Poly>{d2 * sigma0(1)});
  REQUIRE(g.size() == 1);
  CHECK(g[0] == std::make_pair(d2, 1));
}

TEST_CASE("center_split examples") {
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    auto cs = center_split(bfunction(ctx.E()), pv);
    CHECK(cs.z.is_zero());
    CHECK(cs.rest == sigma0(pv.n));
    cs = center_split(bfunction(ctx.scalar(5)), pv);
    CHECK(cs.z == Poly::constant(r_vars(pv.n), 5));
    CHECK(cs.rest.is_zero());
    const Poly gxy = gamma(bfunction(ctx.evaluate("XY")), pv);
    cs = center_split(bfunction(ctx.evaluate("XY")), pv);
    CHECK(cs.z == decompose_tau(gxy).front());
    CHECK(is_tau_invariant(cs.z));
    CHECK(divide_exact(cs.rest, sigma0(pv.n)).has_value());
  }
}

TEST_CASE("property: gamma is multiplicative on T0") {
  Rng rng(41);
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    for (int t = 0; t < 5; ++t) {
      const TorusElement a = random_T0(ctx, rng), b = random_T0(ctx, rng);
      CHECK(gamma(bfunction(a * b), pv) == gamma(bfunction(a), pv) * gamma(bfunction(b), pv));
    }
  }
}

TEST_CASE("property: tau through gamma") {
  Rng rng(42);
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    for (int t = 0; t < 5; ++t) {
      const TorusElement d = random_T0(ctx, rng);
      CHECK(gamma(bfunction(tau_inverse(d)), pv) == tau_shift(gamma(bfunction(d), pv)));
    }
  }
}

TEST_CASE("property: Harish-Chandra generators are independent") {
  Rng rng(43);
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    std::vector<Poly> gens;
    for (int l = 0; l <= pv.n; ++l)
      gens.push_back(gamma(bfunction(ctx.x_power(1 - l) * ctx.Y() * ctx.x_power(l)), pv));
    std::vector<Rational> pt;
    for (int i = 0; i <= pv.n; ++i) pt.push_back(Rational(rng.uniform_int(1, 50), rng.uniform_int(1, 7)));
    CHECK_FALSE(jacobian_determinant(gens, pt).is_zero());
  }
}

TEST_CASE("property: decompose_tau re-expands with invariant coefficients") {
  Rng rng(44);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 10; ++t) {
      const Poly s = symmetrize(rng.poly(r_vars(n), 3, 3));
      const auto alphas = decompose_tau(s);
      Poly re(r_vars(n));
      Poly sp = Poly::constant(r_vars(n), 1);
      for (const Poly& a : alphas) {
        CHECK(is_tau_invariant(a));
        CHECK(is_symmetric(a));
        re += a * sp;
        sp *= sigma0(n);
      }
      CHECK(re == s);
      // top coefficient equals the normalized finite difference
      const int p = static_cast<int>(alphas.size()) - 1;
      Poly diff(r_vars(n));
      for (int k = 0; k <= p; ++k)
        diff += tau_shift(s, k) * (binomial(p, k) * Rational((p - k) % 2 ? -1 : 1));
      Rational scale(1);
      for (int i = 1; i <= p; ++i) scale *= Rational(i * (n + 1));
      CHECK(diff == alphas.back() * scale);
      // a multiple of sigma0 has zero invariant part
      CHECK(decompose_tau(s * sigma0(n)).front().is_zero());
    }
  }
}
