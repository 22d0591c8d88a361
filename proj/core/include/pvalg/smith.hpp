#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pvalg/poly.hpp"
#include "pvalg/random.hpp"

namespace pvalg {

/// u with u(t+n+1) - u(t) = f(t) and zero constant term in t.
/// `f` lives in a context whose variable `t_index` is t; other variables are scalars.
Poly solve_u(const Poly& f, std::size_t t_index, int n);
/// u(t+n+1) - u(t).
Poly difference(const Poly& u, std::size_t t_index, int n);

/// Coefficient ring R = Q[ring vars] and the polynomial ring R[t] used for e-polynomials.
class CoeffRing {
 public:
  explicit CoeffRing(VarsPtr ring);
  const VarsPtr& ring() const { return ring_; }
  /// Ring variables followed by t.
  const VarsPtr& with_t() const { return with_t_; }
  std::size_t t_index() const { return ring_->size(); }
  /// Coefficient of t^k, as a ring element.
  Poly t_coeff(const Poly& p, int k) const;
  /// Ring element lifted to R[t].
  Poly lift(const Poly& r) const { return r.rebase(with_t_); }
  Poly t() const { return Poly::variable(with_t_, t_index()); }

  friend bool operator==(const CoeffRing& a, const CoeffRing& b) { return *a.ring_ == *b.ring_; }

 private:
  VarsPtr ring_;
  VarsPtr with_t_;
};

/// S(R, f, n): [e,x] = (n+1)x, [e,y] = -(n+1)y, [y,x] = f(e).
class SmithContext {
 public:
  /// `f` is parsed or given in ring.with_t().
  SmithContext(CoeffRing ring, int n, Poly f);
  const CoeffRing& ring() const { return ring_; }
  int n() const { return n_; }
  const Poly& f() const { return f_; }
  /// solve_u(f).
  const Poly& u() const { return u_; }
  bool same_as(const SmithContext& o) const;

 private:
  CoeffRing ring_;
  int n_;
  Poly f_;
  Poly u_;
};
using SmithContextPtr = std::shared_ptr<const SmithContext>;
SmithContextPtr make_smith(const VarsPtr& ring, int n, std::string_view f);

/// PBW monomial x^j y^i e^k.
struct Pbw {
  int j = 0, i = 0, k = 0;
  friend auto operator<=>(const Pbw&, const Pbw&) = default;
  int weight() const { return j - i; }
  std::string word() const;
};

enum class Strategy { Leftmost, Rightmost };

/// Element of S(R,f,n) in PBW normal form; coefficients are ring elements.
class SmithElement {
 public:
  using Terms = std::map<Pbw, Poly>;

  explicit SmithElement(SmithContextPtr ctx);
  static SmithElement monomial(SmithContextPtr ctx, Pbw m, const Poly& coeff);
  static SmithElement scalar(SmithContextPtr ctx, const Rational& c);
  static SmithElement x(SmithContextPtr ctx) { return monomial(ctx, {1, 0, 0}, one(ctx)); }
  static SmithElement y(SmithContextPtr ctx) { return monomial(ctx, {0, 1, 0}, one(ctx)); }
  static SmithElement e(SmithContextPtr ctx) { return monomial(ctx, {0, 0, 1}, one(ctx)); }
  /// P(e) for P in R[t].
  static SmithElement e_poly(SmithContextPtr ctx, const Poly& p);

  const SmithContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SmithElement operator-() const;
  SmithElement& operator+=(const SmithElement& o);
  SmithElement& operator-=(const SmithElement& o);
  /// Multiplies by a ring element.
  SmithElement& operator*=(const Poly& r);
  friend SmithElement operator+(SmithElement a, const SmithElement& b) { return a += b; }
  friend SmithElement operator-(SmithElement a, const SmithElement& b) { return a -= b; }
  friend SmithElement operator*(SmithElement a, const Poly& r) { return a *= r; }
  friend SmithElement operator*(const SmithElement& a, const SmithElement& b);
  friend bool operator==(const SmithElement& a, const SmithElement& b);

  /// Components by weight j - i.
  std::map<int, SmithElement> weight_components() const;
  std::string to_string() const;

  void add(const Pbw& m, const Poly& coeff);

 private:
  static Poly one(const SmithContextPtr& ctx) { return Poly::constant(ctx->ring().ring(), 1); }
  void check_same(const SmithElement& o) const;

  SmithContextPtr ctx_;
  Terms terms_;
};

SmithElement smith_mul(const SmithElement& a, const SmithElement& b,
                       Strategy strategy = Strategy::Leftmost);
SmithElement smith_commutator(const SmithElement& a, const SmithElement& b);
/// Normal form of a word over {x, y, e} by the chosen rewriting strategy.
SmithElement rewrite_word(const SmithContextPtr& ctx, std::string_view word, Strategy strategy);

/// Omega_1 = xy - u(e).
SmithElement casimir(const SmithContextPtr& ctx);
/// Omega_2 = xy + yx - u(e+n+1) - u(e), built without reference to Omega_1.
SmithElement casimir2(const SmithContextPtr& ctx);

/// Parses words over x, y, e with ring-variable and rational coefficients.
SmithElement parse_smith(const SmithContextPtr& ctx, std::string_view text);
std::string random_smith_word(Rng& rng, int max_letters);

/// U(R,u,n): x y = u(e), y x = u(e+n+1), [e,x] = (n+1)x, [e,y] = -(n+1)y.
class UContext {
 public:
  UContext(CoeffRing ring, int n, Poly u);
  const CoeffRing& ring() const { return ring_; }
  int n() const { return n_; }
  const Poly& u() const { return u_; }
  bool same_as(const UContext& o) const;

 private:
  CoeffRing ring_;
  int n_;
  Poly u_;
};
using UContextPtr = std::shared_ptr<const UContext>;
UContextPtr make_u(const VarsPtr& ring, int n, std::string_view u);

/// Canonical form: weight w -> P(e), standing for x^w P(e) (w >= 0) or y^-w P(e) (w < 0).
class UElement {
 public:
  using Terms = std::map<int, Poly>;

  explicit UElement(UContextPtr ctx);
  static UElement term(UContextPtr ctx, int weight, const Poly& e_poly);
  static UElement x(UContextPtr ctx, int power = 1);
  static UElement y(UContextPtr ctx, int power = 1);
  static UElement e(UContextPtr ctx);
  static UElement scalar(UContextPtr ctx, const Rational& c);

  const UContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of y^l e^k (l > 0) or x^m e^r (m >= 0) as a ring element.
  std::map<std::pair<int, int>, Poly> basis_terms() const;

  UElement operator-() const;
  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  /// Multiplies by a ring element.
  UElement& operator*=(const Poly& r);
  friend UElement operator*(UElement a, const Poly& r) { return a *= r; }
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator*(const UElement& a, const UElement& b);
  friend bool operator==(const UElement& a, const UElement& b);

  std::string to_string() const;
  void add(int weight, const Poly& e_poly);

 private:
  void check_same(const UElement& o) const;

  UContextPtr ctx_;
  Terms terms_;
};

UElement u_mul(const UElement& a, const UElement& b);
/// Brute-force reduction of a word over {x, y, e} by the defining relations.
UElement u_rewrite_word(const UContextPtr& ctx, std::string_view word);
UElement parse_u(const UContextPtr& ctx, std::string_view text);
/// Image of a Smith element under S(R,f,n) -> U(R,u,n); requires f = u(t+n+1) - u(t).
UElement project_to_u(const SmithElement& s, const UContextPtr& target);

/// x^s P(e) (or y^s P(e) for y_side) for the basis P = t^k, k <= degree,
/// checked pairwise distinct and nonzero.
bool injectivity_probe(const UContextPtr& ctx, int s, int degree, bool y_side);

}  // namespace pvalg
