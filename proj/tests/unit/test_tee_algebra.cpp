#include "doctest.h"
#include "pvalg/errors.hpp"
#include "pvalg/pv_catalog.hpp"
#include "pvalg/random.hpp"
#include "pvalg/sym_harish.hpp"
#include "pvalg/tee.hpp"

using namespace pvalg;

namespace {

Poly tp(int n, const std::string& s) { return Poly::parse(torus_vars(n), s); }
Poly ap(int n, const std::string& s) { return Poly::parse(a_vars(n), s); }

std::vector<PVType> small_entries() {
  std::vector<PVType> out;
  for (const PVType& pv : builtin_entries())
    if (pv.n <= 3) out.push_back(pv);
  return out;
}

}  // namespace

TEST_CASE("generators") {
  const TeeContext ctx(builtin(Family::A, 3));
  CHECK(ctx.X() == TorusElement::part(2, 1, tp(2, "1")));
  CHECK(ctx.Xinv() == TorusElement::part(2, -1, tp(2, "1")));
  CHECK(ctx.E() == TorusElement::part(2, 0, tp(2, "3X0+2X1+X2")));
  CHECK(ctx.Y() == TorusElement::part(2, -1, tp(2, "X0*(X0+X1+1)*(X0+X1+X2+2)")));
}

TEST_CASE("evaluate_word examples") {
  const TeeContext ctx(quadratic(4));
  CHECK(ctx.evaluate("XY") == TorusElement::part(1, 0, ctx.b_Y()));
  const TorusElement yx = ctx.evaluate("[Y,X]");
  CHECK(yx == TorusElement::part(1, 0, ctx.b_Y().shift(0, 1) - ctx.b_Y()));
  CHECK(yx == ctx.E() + ctx.scalar(Rational(4, 2)));
  CHECK(ctx.evaluate("X Xinv") == ctx.scalar(1));
  CHECK(ctx.evaluate("X^-1") == ctx.Xinv());
  CHECK(ctx.evaluate("2E - 1/2 X Y") == ctx.E() * Rational(2) - ctx.evaluate("XY") * Rational(1, 2));
  CHECK_THROWS_AS(ctx.evaluate(""), ParseError);
  CHECK_THROWS_AS(ctx.evaluate("X Z"), ParseError);
  CHECK_THROWS_AS(ctx.evaluate("Y^-1"), ParseError);
  CHECK_THROWS_AS(ctx.evaluate("[X,Y"), ParseError);
}

TEST_CASE("grade_project examples") {
  const TeeContext ctx(builtin(Family::A, 2));
  CHECK(grade_project(ctx.X(), 1) == ctx.X());
  CHECK(grade_project(ctx.X(), 0).is_zero());
  CHECK(grade_project(ctx.evaluate("XY+X"), 0) == TorusElement::part(1, 0, ctx.b_Y()));
}

TEST_CASE("bfunction examples") {
  const TeeContext ctx(builtin(Family::A, 3));
  const BFunction by = bfunction(ctx.Y());
  CHECK(by.p == -1);
  CHECK(by.poly == ap(2, "a0*(a0+a1+1)*(a0+a1+a2+2)"));
  const BFunction be = bfunction(ctx.E());
  CHECK(be.p == 0);
  CHECK(be.poly == ap(2, "3a0+2a1+a2"));
  CHECK_THROWS_AS(bfunction(ctx.X() + ctx.E()), NotHomogeneous);
}

TEST_CASE("tau examples") {
  Rng rng(3);
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    CHECK(tau(ctx.E()) == ctx.E() - ctx.scalar(pv.n + 1));
    CHECK(tau(ctx.X()) == ctx.X());
    CHECK(tau(ctx.Y()) == ctx.X() * ctx.Y() * ctx.Xinv());
    const TorusElement u = random_T(ctx, rng, 2, true);
    CHECK(tau(tau_inverse(u)) == u);
  }
}

TEST_CASE("hq examples") {
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    const BFunction h1 = hq_sequence(ctx, 1);
    CHECK(h1.p == 0);
    CHECK(h1.poly == Poly(a_vars(pv.n), (ctx.b_Y() - ctx.b_Y().shift(0, 1)).terms()));
  }
  const PVType q = quadratic(6);
  const TeeContext c1(q);
  CHECK(hq_sequence(c1, 1).poly ==
        -(ap(1, "2a0+a1+1") + Poly::constant(a_vars(1), q.d / Rational(2))));
  const TeeContext c2(builtin(Family::A, 3));
  CHECK(hq_sequence(c2, 3).poly.degree_in("a0") == 4);
  CHECK_THROWS_AS(hq_sequence(c2, 0), OutOfRange);
}

TEST_CASE("membership examples") {
  const TeeContext ctx(builtin(Family::A, 3));
  CHECK(is_in_T0(ctx, ctx.evaluate("XY")));
  CHECK_FALSE(is_in_T0(ctx, TorusElement::part(2, 0, tp(2, "X1"))));
  CHECK(is_in_T0(ctx, ctx.E()));
  CHECK_FALSE(is_in_T0(ctx, ctx.X()));
  CHECK(is_central(ctx, ctx.scalar(Rational(7, 3))));
  CHECK_FALSE(is_central(ctx, ctx.E()));
  CHECK(is_central(ctx, tau_inverse(ctx.E()) - ctx.E()));
}

TEST_CASE("decompose_T examples") {
  const TeeContext ctx(builtin(Family::C, 3));
  auto d = decompose_T(ctx, ctx.X());
  REQUIRE(d.size() == 1);
  CHECK(d[0].first == 1);
  CHECK(d[0].second == ctx.scalar(1));
  d = decompose_T(ctx, ctx.Y());
  REQUIRE(d.size() == 1);
  CHECK(d[0].first == -1);
  CHECK(d[0].second * ctx.Xinv() == ctx.Y());
  CHECK(d[0].second == ctx.evaluate("Y X"));
  d = decompose_T(ctx, ctx.E() + ctx.X());
  REQUIRE(d.size() == 2);
  CHECK(d[0] == std::make_pair(0, ctx.E()));
  CHECK(d[1] == std::make_pair(1, ctx.scalar(1)));
  CHECK_THROWS_AS(decompose_T(ctx, TorusElement::part(2, 1, tp(2, "X1"))), MembershipFailure);
}

TEST_CASE("decompose_T0XY examples") {
  const TeeContext ctx(builtin(Family::A, 3));
  auto d = decompose_T0XY(ctx, ctx.Y());
  REQUIRE(d.neg.size() == 1);
  CHECK(d.neg[0] == std::make_pair(1, ctx.scalar(1)));
  CHECK(d.pos.empty());
  CHECK_THROWS_AS(decompose_T0XY(ctx, ctx.Xinv()), NotInT0XY);
  d = decompose_T0XY(ctx, ctx.evaluate("YY"));
  REQUIRE(d.neg.size() == 1);
  CHECK(d.neg[0] == std::make_pair(2, ctx.scalar(1)));
  CHECK(ctx.y_power(2) == ctx.evaluate("YY"));
  CHECK(ctx.y_power(3) == ctx.evaluate("Y^3"));
}

TEST_CASE("property: T0 is commutative") {
  Rng rng(31);
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    for (int t = 0; t < 10; ++t) {
      const TorusElement a = ctx.evaluate(random_word(rng, 0, 4));
      const TorusElement b = ctx.evaluate(random_word(rng, 0, 4));
      CHECK(commutator(a, b).is_zero());
    }
  }
}

TEST_CASE("property: grading by E") {
  Rng rng(32);
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    for (int t = 0; t < 10; ++t) {
      const int p = rng.uniform_int(-2, 2);
      const TorusElement u = ctx.evaluate(random_word(rng, p, 4));
      CHECK(commutator(ctx.E(), u) == u * Rational(p * (pv.n + 1)));
    }
  }
}

TEST_CASE("property: tau commutation rules") {
  Rng rng(33);
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    for (int t = 0; t < 10; ++t) {
      const TorusElement r = random_T0(ctx, rng);
      CHECK(ctx.X() * r == tau(r) * ctx.X());
      CHECK(r * ctx.Y() == ctx.Y() * tau(r));
    }
  }
}

TEST_CASE("property: b-functions of XY and YX") {
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    CHECK(ctx.evaluate("XY").at(0) == ctx.b_Y());
    CHECK(ctx.evaluate("YX").at(0) == ctx.b_Y().shift(0, 1));
    if (pv.n == 1)
      CHECK(ctx.evaluate("[Y,X]") == ctx.E() + ctx.scalar(Rational(pv.k, 2)));
  }
}

TEST_CASE("property: degree growth of H_q") {
  for (int n = 1; n <= 3; ++n) {
    const TeeContext ctx(custom(n, n * (n + 1) + n + 1));
    for (int q = 1; q <= 4; ++q)
      CHECK(hq_sequence(ctx, q).poly.degree_in("a0") == hq_expected_degree(n, q));
  }
}

TEST_CASE("property: central elements commute with X and Y") {
  Rng rng(34);
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    for (int t = 0; t < 5; ++t) {
      const Poly z = random_central(rng, pv.n, 3);
      const TorusElement c = TorusElement::part(
          pv.n, 0, Poly(ctx.vars(), gamma_inverse(z, pv).terms()));
      REQUIRE(is_central(ctx, c));
      CHECK(commutator(c, ctx.X()).is_zero());
      CHECK(commutator(c, ctx.Y()).is_zero());
      for (int i = 1; i <= 3; ++i) CHECK(ctx.x_power(i) * c == c * ctx.x_power(i));
    }
  }
}

TEST_CASE("property: decompositions round-trip") {
  Rng rng(35);
  for (const PVType& pv : small_entries()) {
    const TeeContext ctx(pv);
    for (int t = 0; t < 5; ++t) {
      const TorusElement u = random_T(ctx, rng, 2, true);
      CHECK(recompose_T(ctx, decompose_T(ctx, u)) == u);
      const TorusElement v = random_T(ctx, rng, 2, false);
      CHECK(recompose_T0XY(ctx, decompose_T0XY(ctx, v)) == v);
    }
  }
}
