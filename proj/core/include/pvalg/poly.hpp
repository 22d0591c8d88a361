#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pvalg/rational.hpp"

namespace pvalg {

/// Ordered list of variable names; at most one of them may carry negative
/// exponents (the Laurent variable).
class Vars {
 public:
  explicit Vars(std::vector<std::string> names, std::optional<std::size_t> laurent = std::nullopt);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws OutOfRange for unknown names.
  std::size_t require(std::string_view name) const;
  std::optional<std::size_t> laurent() const { return laurent_; }

  friend bool operator==(const Vars& a, const Vars& b) {
    return a.names_ == b.names_ && a.laurent_ == b.laurent_;
  }

 private:
  std::vector<std::string> names_;
  std::optional<std::size_t> laurent_;
};

using VarsPtr = std::shared_ptr<const Vars>;

VarsPtr make_vars(std::vector<std::string> names, std::optional<std::size_t> laurent = std::nullopt);
/// Names prefix0 .. prefix{count-1}; repeated calls share one context.
VarsPtr indexed_vars(std::string_view prefix, std::size_t count);
/// `base` with one extra non-Laurent variable appended.
VarsPtr extend_vars(const VarsPtr& base, std::string name);

using Exponents = std::vector<int>;

/// Graded lexicographic order, greatest first: total degree, then the
/// exponent of the earliest variable that differs.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Returned by degree queries on the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in grlex order, leading term first; zero coefficients are
/// never stored.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit Poly(VarsPtr vars);
  Poly(VarsPtr vars, TermMap terms);

  static Poly constant(VarsPtr vars, const Rational& c);
  static Poly variable(VarsPtr vars, std::string_view name);
  static Poly variable(VarsPtr vars, std::size_t index);
  static Poly monomial(VarsPtr vars, Exponents exps, const Rational& c = Rational(1));
  /// Parses the canonical rendering (and any expression built from +, -, *, ^, parentheses).
  static Poly parse(VarsPtr vars, std::string_view text);

  const VarsPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const Exponents& leading_exponents() const;
  const Rational& leading_coeff() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  /// Nonnegative power; a single-term polynomial may also take negative powers
  /// when its variables are all Laurent.
  Poly pow(int exponent) const;

  /// p with `var` replaced by `var + c`.
  Poly shift(std::string_view var, const Rational& c) const;
  Poly shift(std::size_t index, const Rational& c) const;

  /// p with variable `target` replaced by `target + c * source`.
  Poly shear(std::size_t target, std::size_t source, const Rational& c) const;

  Poly derivative(std::size_t index) const;

  /// Replaces variable i by images[i]; all images share the target context.
  Poly substitute(std::span<const Poly> images) const;
  /// Evaluates variable `index` at `value`, keeping the context.
  Poly evaluate_at(std::size_t index, const Rational& value) const;
  Rational evaluate(std::span<const Rational> point) const;

  int degree_in(std::string_view var) const;
  int degree_in(std::size_t index) const;
  /// Lowest exponent of the variable; kNegInfDegree for zero.
  int min_degree_in(std::size_t index) const;
  int total_degree() const;
  /// Coefficient of var^power, as a polynomial in the same context with
  /// that variable's exponent cleared.
  Poly coefficient_in(std::size_t index, int power) const;

  /// Re-expresses this polynomial in another context by matching names;
  /// every variable that occurs must exist in the target.
  Poly rebase(const VarsPtr& target) const;

  /// Permutes variables: variable i becomes variable perm[i].
  Poly permute(std::span<const std::size_t> perm) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend std::optional<Poly> divide_exact(const Poly& p, const Poly& q);

 private:
  void check_same(const Poly& o) const;
  void add_term(const Exponents& e, const Rational& c);

  VarsPtr vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Exact quotient p/q when q divides p, std::nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& p, const Poly& q);

}  // namespace pvalg
