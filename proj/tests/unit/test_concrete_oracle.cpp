#include "doctest.h"

#include "pvalg/concrete_oracle.hpp"
#include "pvalg/errors.hpp"
#include "pvalg/random.hpp"
#include "pvalg/tee.hpp"

using namespace pvalg;

namespace {

Poly px(const VarsPtr& v, std::string_view text) { return Poly::parse(v, text); }

}  // namespace

TEST_CASE("apply: single derivatives and the Euler operator") {
  const VarsPtr v = make_vars({"x1", "x2"});
  const DiffOp d1 = DiffOp::derivative(v, {1, 0});
  CHECK(apply(d1, px(v, "x1^2")) == px(v, "2*x1"));
  const DiffOp euler = euler_operator(v);
  for (int m = 0; m <= 5; ++m) {
    const Poly p = px(v, "x1").pow(m);
    CHECK(apply(euler, p) == p * Rational(m));
  }
}

TEST_CASE("apply: det(d) on det for 2x2 is 2") {
  const ConcreteModel model = det_model(2);
  CHECK(apply(model.y_op, model.delta0) == Poly::constant(model.vars, Rational(2)));
}

TEST_CASE("apply is linear") {
  const ConcreteModel model = quadratic_model(5);
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly p = rng.poly(model.vars, 4, 3);
    const Poly q = rng.poly(model.vars, 4, 3);
    const Rational c = rng.rational(5);
    CHECK(apply(model.y_op, p + q * c) == apply(model.y_op, p) + apply(model.y_op, q) * c);
  }
}

TEST_CASE("DiffOp composition agrees with sequential application") {
  const VarsPtr v = make_vars({"x1", "x2", "x3"});
  Rng rng(11);
  const DiffOp a = DiffOp::term(px(v, "x1*x2"), {0, 1, 1}) + DiffOp::term(px(v, "3"), {2, 0, 0});
  const DiffOp b = DiffOp::term(px(v, "x3^2"), {1, 0, 0}) + DiffOp::term(px(v, "x2"), {0, 0, 0});
  const DiffOp ab = a * b;
  for (int trial = 0; trial < 10; ++trial) {
    const Poly p = rng.poly(v, 5, 4);
    CHECK(apply(ab, p) == apply(a, apply(b, p)));
  }
}

TEST_CASE("quadratic model shape") {
  const ConcreteModel m4 = quadratic_model(4);
  CHECK(m4.delta0 == px(m4.vars, "x1*x2 + x3*x4"));
  CHECK(m4.delta1 == px(m4.vars, "x1"));
  CHECK(m4.pv.n == 1);
  CHECK(m4.pv.k == 4);
  const Poly c = apply(m4.y_op, m4.delta0);
  CHECK(c.is_constant());
  CHECK_FALSE(c.is_zero());
  for (int m = 1; m <= 5; ++m) CHECK(apply(m4.y_op, m4.delta1.pow(m)).is_zero());
  CHECK_THROWS_AS(quadratic_model(2), OutOfRange);
}

TEST_CASE("det model Cayley identity") {
  for (int m = 2; m <= 3; ++m) {
    const ConcreteModel model = det_model(m);
    CHECK(model.pv == builtin(Family::A, m));
    for (int s = 1; s <= (m == 2 ? 4 : 3); ++s) {
      Rational expected(1);
      for (int j = 0; j < m; ++j) expected *= Rational(s + j);
      CHECK(empirical_b(model, {s, 0}) == expected);
    }
  }
  CHECK(apply(det_model(3).y_op, det_model(3).delta0) == Poly::constant(det_model(3).vars, Rational(6)));
  CHECK_THROWS_AS(det_model(1), OutOfRange);
  CHECK_THROWS_AS(det_model(4), OutOfRange);
}

TEST_CASE("harmonic slice a0 = 0 gives zero") {
  for (const auto& model : {det_model(2), det_model(3), quadratic_model(4), quadratic_model(5)}) {
    for (int m = 0; m <= 3; ++m) CHECK(empirical_b(model, {0, m}).is_zero());
  }
}

TEST_CASE("empirical b is the b-function up to one constant") {
  const ConcreteModel model = quadratic_model(4);
  const TeeContext tee(model.pv);
  const Rational c = empirical_b(model, {1, 0}) / tee.b_Y().evaluate(std::vector<Rational>{1, 0});
  CHECK(empirical_b(model, {1, 1}) == c * Rational(3));
}

TEST_CASE("non-proportional results are reported") {
  ConcreteModel model = quadratic_model(4);
  model.y_op = DiffOp::derivative(model.vars, {1, 0, 0, 0});
  CHECK_THROWS_AS(empirical_b(model, {2, 0}), NotProportional);
}

TEST_CASE("calibration: a single constant explains every cell") {
  for (const auto& model : {det_model(2), quadratic_model(4), quadratic_model(5), quadratic_model(6)}) {
    const CalibrationTable t = calibrate_and_check(model, 4);
    CHECK(t.passed());
    CHECK(t.euler_ok);
    CHECK(t.rows.size() == 15);
  }
  CHECK(calibrate_and_check(det_model(2), 4).c == Rational(1));
  CHECK_THROWS_AS(calibrate_and_check(det_model(2), 1), OutOfRange);
}

TEST_CASE("calibration rejects a wrong constant") {
  ConcreteModel model = quadratic_model(4);
  model.calibration = Rational(5);
  const CalibrationTable t = calibrate_and_check(model, 3);
  CHECK_FALSE(t.passed());
}

TEST_CASE("parse_model") {
  CHECK(parse_model("det:2").name == "det:2");
  CHECK(parse_model("quad:5").pv == quadratic(5));
  CHECK_THROWS_AS(parse_model("det"), ParseError);
  CHECK_THROWS_AS(parse_model("cube:3"), ParseError);
}
