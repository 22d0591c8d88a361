#include <vector>

#include "doctest.h"
#include "pvalg/errors.hpp"
#include "pvalg/poly.hpp"
#include "pvalg/random.hpp"

using namespace pvalg;

namespace {

const VarsPtr kX = indexed_vars("X", 2);
const VarsPtr kT = make_vars({"t"}, 0);

Poly px(const char* s) { return Poly::parse(kX, s); }

}  // namespace

TEST_CASE("rational normal form") {
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK(binomial(5, 2) == Rational(10));
}

TEST_CASE("add examples") {
  CHECK((px("X0") + px("-X0")).is_zero());
  CHECK(px("X0^2+1") + px("X0") == px("X0^2+X0+1"));
  CHECK(px("1/2*X0") + px("1/2*X0") == px("X0"));
  CHECK_THROWS_AS(px("X0") + Poly::parse(kT, "t"), ContextMismatch);
}

TEST_CASE("mul examples") {
  CHECK(px("X0+1") * px("X0-1") == px("X0^2-1"));
  CHECK(Poly::parse(kT, "t") * Poly::parse(kT, "t^-1") == Poly::constant(kT, 1));
  CHECK((Poly(kX) * px("X0+X1")).is_zero());
}

TEST_CASE("shift examples") {
  CHECK(px("X0^2").shift("X0", 1) == px("X0^2+2X0+1"));
  CHECK(px("X0*X1").shift("X0", -1) == px("X0*X1-X1"));
  CHECK(px("X0^3+X1").shift("X0", 0) == px("X0^3+X1"));
  CHECK_THROWS_AS(px("X0").shift("Z", 1), OutOfRange);
  CHECK_THROWS_AS(Poly::parse(kT, "t").shift("t", 1), OutOfRange);
}

TEST_CASE("divide_exact examples") {
  CHECK(divide_exact(px("X0^2-1"), px("X0-1")) == px("X0+1"));
  CHECK_FALSE(divide_exact(px("X0^2+1"), px("X0")).has_value());
  CHECK(divide_exact(px("3X0*X1^2-X1"), Poly::constant(kX, 1)) == px("3X0*X1^2-X1"));
  CHECK(divide_exact(Poly::parse(kT, "t^2+t^-1"), Poly::parse(kT, "t^-1")) ==
        Poly::parse(kT, "t^3+1"));
  CHECK_FALSE(divide_exact(Poly::parse(kT, "t+1"), Poly::parse(kT, "t+2")).has_value());
}

TEST_CASE("degree_in examples") {
  CHECK(px("X0^3*X1+X0").degree_in("X0") == 3);
  CHECK(px("X1^2").degree_in("X0") == 0);
  CHECK(Poly(kX).degree_in("X0") == kNegInfDegree);
  CHECK_THROWS_AS(px("X0").degree_in("Q"), OutOfRange);
}

TEST_CASE("rendering round-trips through parse") {
  const Poly p = px("3/2*X0^2*X1 - 1");
  CHECK(p.to_string() == "3/2*X0^2*X1 - 1");
  CHECK(px("-X0 + X1").to_string() == "-X0 + X1");
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const Poly q = rng.poly(kX, 5, 4);
    CHECK(Poly::parse(kX, q.to_string()) == q);
  }
}

TEST_CASE("property: ring axioms") {
  Rng rng(11);
  const VarsPtr v = indexed_vars("X", 3);
  for (int i = 0; i < 200; ++i) {
    const Poly a = rng.poly(v, 4, 3), b = rng.poly(v, 4, 3), c = rng.poly(v, 4, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("property: shift composition") {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Poly p = rng.poly(kX, 5, 5);
    const Rational a = rng.rational(), b = rng.rational();
    CHECK(p.shift("X0", a).shift("X0", b) == p.shift("X0", a + b));
  }
}

TEST_CASE("property: divide_exact inverts mul") {
  Rng rng(13);
  const VarsPtr v = indexed_vars("X", 3);
  for (int i = 0; i < 200; ++i) {
    const Poly p = rng.poly(v, 4, 3);
    const Poly q = rng.nonzero_poly(v, 4, 3);
    auto r = divide_exact(p * q, q);
    REQUIRE(r.has_value());
    CHECK(*r == p);
  }
}

TEST_CASE("substitute and evaluate agree") {
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const Poly p = rng.poly(kX, 5, 4);
    const std::vector<Rational> pt{rng.rational(), rng.rational()};
    const std::vector<Poly> imgs{Poly::constant(kX, pt[0]), Poly::constant(kX, pt[1])};
    CHECK(p.substitute(imgs).constant_term() == p.evaluate(pt));
  }
}
