#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pvalg/poly.hpp"
#include "pvalg/pv_catalog.hpp"

namespace pvalg {

/// Differential operator sum_alpha c_alpha(x) d^alpha, derivatives to the right.
class DiffOp {
 public:
  using Terms = std::map<Exponents, Poly>;

  explicit DiffOp(VarsPtr vars);
  static DiffOp term(const Poly& coeff, Exponents derivs);
  static DiffOp derivative(const VarsPtr& vars, Exponents derivs);
  /// Constant-coefficient operator q(d) for a polynomial q in the same variables.
  static DiffOp from_dual(const Poly& q);

  const VarsPtr& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }

  DiffOp& operator+=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  /// Composition, normal ordered by the Leibniz rule.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

 private:
  void add(const Exponents& derivs, const Poly& coeff);

  VarsPtr vars_;
  Terms terms_;
};

/// d^alpha p.
Poly derive(const Poly& p, const Exponents& alpha);
Poly apply(const DiffOp& op, const Poly& p);
/// sum_i x_i d_i.
DiffOp euler_operator(const VarsPtr& vars);

struct ConcreteModel {
  PVType pv;
  std::string name;
  VarsPtr vars;
  Poly delta0;
  Poly delta1;
  DiffOp y_op;
  DiffOp e_op;
  /// Asserted constant; fitted from the cell (1,0) when unset.
  std::optional<Rational> calibration;
};

/// Split form x1 x2 + x3 x4 + ... (+ x_k^2 for odd k) on Q^k, k >= 3.
ConcreteModel quadratic_model(int k);
/// Determinant on m x m matrices, 2 <= m <= 3.
ConcreteModel det_model(int m);
/// "det:m" or "quad:k".
ConcreteModel parse_model(std::string_view selector);

/// Scalar s with Y(D0^a0 D1^a1) = s D0^(a0-1) D1^a1. Entries past a1 must be zero.
/// Throws NotProportional when no such scalar exists.
Rational empirical_b(const ConcreteModel& model, const std::vector<int>& a);

struct CalibrationRow {
  int a0 = 0;
  int a1 = 0;
  std::optional<Rational> empirical;  ///< unset when not proportional
  Rational formula;                   ///< b_Y(a0, a1, 0, ...)
  bool match = false;
  bool euler = false;
};

struct CalibrationTable {
  std::string model;
  Rational c;
  bool fitted = true;
  std::vector<CalibrationRow> rows;
  bool euler_ok = true;

  bool passed() const;
  std::string to_json() const;
  std::string to_text() const;
};

/// Checks every cell a0 + a1 <= max_a against c * b_Y; max_a >= 2.
CalibrationTable calibrate_and_check(const ConcreteModel& model, int max_a);

}  // namespace pvalg
