#include "pvalg/tee.hpp"

#include <algorithm>

#include "pvalg/errors.hpp"
#include "pvalg/expr_parser.hpp"
#include "pvalg/sym_harish.hpp"

namespace pvalg {

VarsPtr a_vars(int n) {
  if (n < 0) throw OutOfRange("rank parameter must be non-negative");
  return indexed_vars("a", static_cast<std::size_t>(n) + 1);
}

namespace {

Poly build_b_y(const PVType& pv, const VarsPtr& v) {
  const Rational half_d = pv.d / Rational(2);
  Poly prod = Poly::constant(v, 1);
  Poly partial(v);
  for (int j = 0; j <= pv.n; ++j) {
    partial += Poly::variable(v, static_cast<std::size_t>(j));
    prod *= partial + Poly::constant(v, Rational(j) * half_d);
  }
  return prod;
}

Poly build_b_e(const PVType& pv, const VarsPtr& v) {
  Poly s(v);
  for (int i = 0; i <= pv.n; ++i)
    s += Poly::variable(v, static_cast<std::size_t>(i)) * Rational(pv.n + 1 - i);
  return s;
}

}  // namespace

TeeContext::TeeContext(PVType pv)
    : pv_(std::move(pv)),
      b_y_(torus_vars(pv_.n)),
      b_e_(torus_vars(pv_.n)),
      x_(pv_.n),
      y_(pv_.n),
      xinv_(pv_.n),
      e_(pv_.n) {
  const VarsPtr& v = x_.vars();
  b_y_ = build_b_y(pv_, v);
  b_e_ = build_b_e(pv_, v);
  x_ = TorusElement::part(pv_.n, 1, Poly::constant(v, 1));
  xinv_ = TorusElement::part(pv_.n, -1, Poly::constant(v, 1));
  y_ = TorusElement::part(pv_.n, -1, b_y_);
  e_ = TorusElement::part(pv_.n, 0, b_e_);
}

TorusElement TeeContext::x_power(int i) const {
  return TorusElement::part(n(), i, Poly::constant(vars(), 1));
}

Poly TeeContext::y_power_poly(int i) const {
  if (i < 0) throw OutOfRange("negative power of Y");
  Poly prod = Poly::constant(vars(), 1);
  for (int j = 0; j < i; ++j) prod *= b_y_.shift(0, Rational(-j));
  return prod;
}

TorusElement TeeContext::y_power(int i) const { return TorusElement::part(n(), -i, y_power_poly(i)); }

TorusElement TeeContext::evaluate(std::string_view word) const {
  ExprGrammar<TorusElement> g;
  g.allow_brackets = true;
  g.atom = [this](std::string_view s) -> std::optional<std::pair<TorusElement, std::size_t>> {
    if (s.substr(0, 4) == "Xinv") return std::make_pair(xinv_, std::size_t{4});
    if (s.empty()) return std::nullopt;
    switch (s[0]) {
      case 'X': return std::make_pair(x_, std::size_t{1});
      case 'Y': return std::make_pair(y_, std::size_t{1});
      case 'E': return std::make_pair(e_, std::size_t{1});
      default: return std::nullopt;
    }
  };
  g.scalar = [this](const Rational& c) { return scalar(c); };
  g.mul = [](const TorusElement& a, const TorusElement& b) { return a * b; };
  g.pow = [](const TorusElement& a, int e) {
    try {
      return a.pow(e);
    } catch (const std::domain_error& err) {
      throw ParseError(err.what());
    }
  };
  const auto first = word.find_first_not_of(" \t");
  if (first == std::string_view::npos) throw ParseError("empty word");
  return parse_expression(word, g);
}

TorusElement grade_project(const TorusElement& u, int p) {
  TorusElement out(u.n());
  out.add_part(p, u.at(p));
  return out;
}

BFunction bfunction(const TorusElement& u) {
  const VarsPtr av = a_vars(u.n());
  if (u.is_zero()) return {0, Poly(av)};
  if (u.parts().size() != 1)
    throw NotHomogeneous("element has " + std::to_string(u.parts().size()) + " degree parts");
  const auto& [m, p] = *u.parts().begin();
  return {m, Poly(av, p.terms())};
}

TorusElement from_bfunction(const BFunction& b, int n) {
  const VarsPtr tv = torus_vars(n);
  if (b.poly.vars()->size() != tv->size()) throw ContextMismatch("b-function rank mismatch");
  return TorusElement::part(n, b.p, Poly(tv, b.poly.terms()));
}

TorusElement tau(const TorusElement& u) {
  return u.map_parts([](int, const Poly& p) { return p.shift(0, Rational(-1)); });
}

TorusElement tau_inverse(const TorusElement& u) {
  return u.map_parts([](int, const Poly& p) { return p.shift(0, Rational(1)); });
}

TorusElement hq_element(const TeeContext& ctx, int q) {
  if (q < 1) throw OutOfRange("H_q needs q >= 1");
  TorusElement h = commutator(ctx.X(), ctx.Y());
  for (int i = 2; i <= q; ++i) h = commutator(ctx.X(), commutator(ctx.Y(), h));
  return h;
}

BFunction hq_sequence(const TeeContext& ctx, int q) { return bfunction(hq_element(ctx, q)); }

int hq_expected_degree(int n, int q) { return (q - 1) * (n - 1) + n; }

bool is_in_T0(const TeeContext& ctx, const TorusElement& u) {
  if (u.is_zero()) return true;
  if (u.parts().size() != 1 || u.parts().begin()->first != 0) return false;
  return is_symmetric(gamma_raw(bfunction(u).poly, ctx.pv()));
}

bool is_central(const TeeContext& ctx, const TorusElement& u) {
  if (!is_in_T0(ctx, u)) return false;
  const Poly p = u.at(0);
  return p.shift(0, Rational(1)) == p;
}

GradedTerms decompose_T(const TeeContext& ctx, const TorusElement& u) {
  GradedTerms out;
  for (const auto& [i, p] : u.parts()) {
    // (0,Q) X^i = (i, Q(X0+i)).
    TorusElement ui = TorusElement::part(ctx.n(), 0, p.shift(0, Rational(-i)));
    if (!is_in_T0(ctx, ui))
      throw MembershipFailure("coefficient of X^" + std::to_string(i) + " is not in T0: " +
                              ui.at(0).to_string());
    out.emplace_back(i, std::move(ui));
  }
  return out;
}

TorusElement recompose_T(const TeeContext& ctx, const GradedTerms& terms) {
  TorusElement out(ctx.n());
  for (const auto& [i, ui] : terms) out += ui * ctx.x_power(i);
  return out;
}

T0XYDecomposition decompose_T0XY(const TeeContext& ctx, const TorusElement& u) {
  T0XYDecomposition d;
  for (const auto& [m, p] : u.parts()) {
    if (m >= 0) {
      TorusElement vi = TorusElement::part(ctx.n(), 0, p.shift(0, Rational(-m)));
      if (!is_in_T0(ctx, vi))
        throw MembershipFailure("coefficient of X^" + std::to_string(m) + " is not in T0");
      d.pos.emplace_back(m, std::move(vi));
      continue;
    }
    const int i = -m;
    // (0,Q) Y^i = (-i, Q(X0-i) B_i).
    auto quotient = divide_exact(p, ctx.y_power_poly(i));
    if (!quotient)
      throw NotInT0XY("degree " + std::to_string(m) + " part is not divisible by the Y^" +
                      std::to_string(i) + " polynomial");
    TorusElement ui = TorusElement::part(ctx.n(), 0, quotient->shift(0, Rational(i)));
    if (!is_in_T0(ctx, ui))
      throw MembershipFailure("coefficient of Y^" + std::to_string(i) + " is not in T0");
    d.neg.emplace_back(i, std::move(ui));
  }
  std::reverse(d.neg.begin(), d.neg.end());
  return d;
}

TorusElement recompose_T0XY(const TeeContext& ctx, const T0XYDecomposition& d) {
  TorusElement out(ctx.n());
  for (const auto& [i, ui] : d.neg) out += ui * ctx.y_power(i);
  for (const auto& [i, vi] : d.pos) out += vi * ctx.x_power(i);
  return out;
}

std::string random_word(Rng& rng, int degree, int max_letters, bool allow_xinv) {
  std::vector<std::string> letters;
  int deg = 0;
  const int count = rng.uniform_int(0, std::max(0, max_letters));
  for (int i = 0; i < count; ++i) {
    switch (rng.uniform_int(0, allow_xinv ? 3 : 2)) {
      case 0: letters.push_back("X"); ++deg; break;
      case 1: letters.push_back("Y"); --deg; break;
      case 2: letters.push_back("E"); break;
      default: letters.push_back("Xinv"); --deg; break;
    }
  }
  while (deg < degree) {
    letters.push_back("X");
    ++deg;
  }
  while (deg > degree) {
    letters.push_back(allow_xinv && rng.coin() ? "Xinv" : "Y");
    --deg;
  }
  std::shuffle(letters.begin(), letters.end(), rng.engine());
  if (letters.empty()) return "1";
  std::string w;
  for (std::size_t i = 0; i < letters.size(); ++i) w += (i ? " " : "") + letters[i];
  return w;
}

TorusElement random_T0(const TeeContext& ctx, Rng& rng, int words, int max_letters) {
  TorusElement out(ctx.n());
  for (int i = 0; i < words; ++i)
    out += ctx.evaluate(random_word(rng, 0, max_letters)) * rng.nonzero_rational();
  return out;
}

TorusElement random_T(const TeeContext& ctx, Rng& rng, int max_degree, bool allow_xinv,
                      int words, int max_letters) {
  TorusElement out(ctx.n());
  for (int i = 0; i < words; ++i) {
    const int deg = rng.uniform_int(-max_degree, max_degree);
    out += ctx.evaluate(random_word(rng, deg, max_letters, allow_xinv)) * rng.nonzero_rational();
  }
  return out;
}

}  // namespace pvalg
