#include "doctest.h"
#include "pvalg/errors.hpp"
#include "pvalg/pv_catalog.hpp"

using namespace pvalg;

TEST_CASE("determinant family m=3") {
  const PVType pv = builtin(Family::A, 3);
  CHECK(pv.n == 2);
  CHECK(pv.k == 9);
  CHECK(pv.d == Rational(2));
}

TEST_CASE("quadratic family has n=1 and d=k-2") {
  for (int k = 3; k <= 12; ++k) {
    const PVType pv = quadratic(k);
    CHECK(pv.n == 1);
    CHECK(pv.k == k);
    CHECK(pv.d == Rational(k - 2));
  }
}

TEST_CASE("E7 row") {
  const PVType pv = builtin(Family::E7);
  CHECK(pv.n == 2);
  CHECK(pv.k == 27);
  CHECK(pv.d == Rational(8));
}

TEST_CASE("custom entries") {
  CHECK(custom(1, 4).d == Rational(2));
  CHECK(custom(2, 9).d == Rational(2));
  CHECK_THROWS_AS(custom(1, 2), OutOfRange);
  CHECK_THROWS_AS(custom(0, 5), OutOfRange);
}

TEST_CASE("size ranges") {
  CHECK_THROWS_AS(builtin(Family::B, 2), OutOfRange);
  CHECK_THROWS_AS(builtin(Family::A, 0), OutOfRange);
  CHECK_THROWS_AS(builtin(Family::D2, 2), OutOfRange);
  CHECK(builtin(Family::A, 1).d == Rational(0));
}

TEST_CASE("property: every builtin satisfies the structure-constant identity") {
  for (const PVType& pv : builtin_entries()) {
    REQUIRE(pv.n >= 1);
    CHECK(pv.d / Rational(2) == Rational(pv.k - (pv.n + 1)) / Rational(pv.n * (pv.n + 1)));
  }
  for (int m = 2; m <= 6; ++m) CHECK(builtin(Family::A, m).d / Rational(2) == Rational(1));
  for (int m = 2; m <= 6; ++m) CHECK(builtin(Family::C, m).d == Rational(1));
}

TEST_CASE("selectors") {
  CHECK(parse_pv("A:3") == builtin(Family::A, 3));
  CHECK(parse_pv("E7") == builtin(Family::E7));
  CHECK(parse_pv("custom:2:9").d == Rational(2));
  CHECK(parse_pv("quadratic:5") == builtin(Family::D1, 3));
  CHECK(parse_pv("B:4").name() == "B:4");
  CHECK_THROWS_AS(parse_pv("Q:3"), ParseError);
  CHECK_THROWS_AS(parse_pv("A:x"), ParseError);
  CHECK(parse_pv("C:2").to_json() ==
        R"({"name":"C:2","family":"C","n":1,"k":3,"d":"1"})");
}
