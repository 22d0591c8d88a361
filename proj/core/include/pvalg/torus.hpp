#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pvalg/poly.hpp"

namespace pvalg {

/// Context X0..Xn shared by all torus elements of rank parameter n.
VarsPtr torus_vars(int n);

/// Element of C[t, 1/t, t d/dt] (x) C[X1..Xn], stored as degree m -> P(X0..Xn)
/// where the part (m, P) stands for t^m (x) P and X0 stands for t d/dt.
/// No stored part is zero.
class TorusElement {
 public:
  using Parts = std::map<int, Poly>;

  explicit TorusElement(int n);
  static TorusElement part(int n, int m, const Poly& p);
  static TorusElement scalar(int n, const Rational& c);

  int n() const { return n_; }
  const VarsPtr& vars() const { return vars_; }
  const Parts& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  /// Polynomial of degree m, zero when absent.
  Poly at(int m) const;

  TorusElement operator-() const;
  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement& operator*=(const Rational& c);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(TorusElement a, const Rational& c) { return a *= c; }
  friend TorusElement operator*(const Rational& c, TorusElement a) { return a *= c; }
  /// Skew product (m,P)(l,Q) = (m+l, P(X0+l) Q).
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  friend bool operator==(const TorusElement& a, const TorusElement& b);

  /// Nonnegative powers; negative powers only for units (m, c) with c constant.
  TorusElement pow(int e) const;

  /// Applies a polynomial map to every part (same context).
  template <class F>
  TorusElement map_parts(F&& f) const {
    TorusElement out(n_);
    for (const auto& [m, p] : parts_) out.add_part(m, f(m, p));
    return out;
  }

  void add_part(int m, const Poly& p);

 private:
  void check_same(const TorusElement& o) const;

  int n_;
  VarsPtr vars_;
  Parts parts_;
};

TorusElement skew_mul(const TorusElement& a, const TorusElement& b);
TorusElement commutator(const TorusElement& a, const TorusElement& b);

/// (t d/dt)^i t^l (t d/dt)^j computed by skew products; throws std::logic_error
/// if it disagrees with lemma_closed_form.
TorusElement lemma_word(int i, int l, int j);
/// sum_p C(i,p) l^(i-p) (l, X0^(p+j)).
TorusElement lemma_closed_form(int i, int l, int j);

struct CellImage {
  std::vector<Rational> cell;
  Rational scalar;
};

/// Action on the abstract cell V_a: part (m, P) sends a to a + m e0 with scalar P(a).
std::vector<CellImage> apply_to_cell(const TorusElement& u, std::span<const Rational> a);

/// Sets X1 = ... = Xn = 0; the result lives in the n = 0 context.
TorusElement radial_restriction(const TorusElement& u);

enum class RenderMode {
  Pairs,       ///< "t^m (*) [P]"
  Theta,       ///< sum A(X~) t^m (tD)^s
  Derivative,  ///< sum B(X~) t^r (d/dt)^s
};

std::string render(const TorusElement& u, RenderMode mode = RenderMode::Pairs);
std::ostream& operator<<(std::ostream& os, const TorusElement& u);

/// {"version":1,"n":n,"parts":[{"m":m,"poly":"..."}]}
std::string to_json(const TorusElement& u);
TorusElement torus_from_json(const std::string& text);

/// Stirling number of the second kind S(s, k).
Rational stirling2(int s, int k);

}  // namespace pvalg
