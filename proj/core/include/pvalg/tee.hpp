#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvalg/pv_catalog.hpp"
#include "pvalg/random.hpp"
#include "pvalg/torus.hpp"

namespace pvalg {

/// Context a0..an for b-functions.
VarsPtr a_vars(int n);

/// D acts on the cell V_a as poly(a) times the p-th power of the invariant.
struct BFunction {
  int p = 0;
  Poly poly;  ///< in a_vars(n)
};

/// Generators of the algebra inside the torus model for one PV type.
class TeeContext {
 public:
  explicit TeeContext(PVType pv);

  const PVType& pv() const { return pv_; }
  int n() const { return pv_.n; }
  const VarsPtr& vars() const { return x_.vars(); }

  const TorusElement& X() const { return x_; }
  const TorusElement& Y() const { return y_; }
  const TorusElement& Xinv() const { return xinv_; }
  const TorusElement& E() const { return e_; }
  /// b_Y = prod_{j=0}^{n} (X0 + ... + Xj + j d/2).
  const Poly& b_Y() const { return b_y_; }
  /// b_E = sum_i (n+1-i) Xi.
  const Poly& b_E() const { return b_e_; }

  /// X^i for any integer i.
  TorusElement x_power(int i) const;
  /// Y^i = (-i, prod_{j<i} b_Y(X0 - j)) for i >= 0.
  TorusElement y_power(int i) const;
  /// Polynomial part of y_power(i).
  Poly y_power_poly(int i) const;
  /// (0, c) for a constant c.
  TorusElement scalar(const Rational& c) const { return TorusElement::scalar(n(), c); }

  /// Words over X, Y, Xinv, E with sums, rational scalars, powers and [u,v].
  TorusElement evaluate(std::string_view word) const;

 private:
  PVType pv_;
  Poly b_y_, b_e_;
  TorusElement x_, y_, xinv_, e_;
};

/// Degree-p part of u.
TorusElement grade_project(const TorusElement& u, int p);

/// Throws NotHomogeneous unless u has exactly one degree part; zero gives {0, 0}.
BFunction bfunction(const TorusElement& u);
/// Re-expresses an a-variable polynomial as a degree-p torus part.
TorusElement from_bfunction(const BFunction& b, int n);

/// X u X^-1: every part gets X0 -> X0 - 1.
TorusElement tau(const TorusElement& u);
/// X^-1 u X: every part gets X0 -> X0 + 1.
TorusElement tau_inverse(const TorusElement& u);

/// H_1 = [X,Y], H_q = [X,[Y,H_{q-1}]].
TorusElement hq_element(const TeeContext& ctx, int q);
BFunction hq_sequence(const TeeContext& ctx, int q);
/// Predicted a0-degree (q-1)(n-1)+n of b_{H_q}.
int hq_expected_degree(int n, int q);

/// Degree-0 element whose Harish-Chandra image is symmetric.
bool is_in_T0(const TeeContext& ctx, const TorusElement& u);
/// T0 element whose polynomial does not depend on a0.
bool is_central(const TeeContext& ctx, const TorusElement& u);

using GradedTerms = std::vector<std::pair<int, TorusElement>>;

/// u = sum_i u_i X^i with u_i in T0; throws MembershipFailure otherwise.
GradedTerms decompose_T(const TeeContext& ctx, const TorusElement& u);
TorusElement recompose_T(const TeeContext& ctx, const GradedTerms& terms);

/// u = sum_{i>0} u_i Y^i + sum_{i>=0} v_i X^i with u_i, v_i in T0.
struct T0XYDecomposition {
  GradedTerms neg;  ///< (i, u_i), i > 0
  GradedTerms pos;  ///< (i, v_i), i >= 0
};
/// Throws NotInT0XY when a negative part is not divisible by the Y-power
/// polynomial, MembershipFailure when a coefficient is outside T0.
T0XYDecomposition decompose_T0XY(const TeeContext& ctx, const TorusElement& u);
TorusElement recompose_T0XY(const TeeContext& ctx, const T0XYDecomposition& d);

/// Random word over {X, Y, Xinv, E} of the given degree; Xinv is omitted
/// when `allow_xinv` is false.
std::string random_word(Rng& rng, int degree, int max_letters, bool allow_xinv = true);
/// Random linear combination of words of degree 0.
TorusElement random_T0(const TeeContext& ctx, Rng& rng, int words = 3, int max_letters = 4);
/// Random linear combination of words with degrees in [-max_degree, max_degree].
TorusElement random_T(const TeeContext& ctx, Rng& rng, int max_degree, bool allow_xinv,
                      int words = 3, int max_letters = 4);

}  // namespace pvalg
