#include "pvalg/smith.hpp"

#include <functional>
#include <sstream>
#include <unordered_map>

#include "pvalg/errors.hpp"
#include "pvalg/expr_parser.hpp"

namespace pvalg {

Poly difference(const Poly& u, std::size_t t_index, int n) {
  return u.shift(t_index, Rational(n + 1)) - u;
}

Poly solve_u(const Poly& f, std::size_t t_index, int n) {
  if (n < 0) throw OutOfRange("grading parameter must be non-negative");
  Poly u(f.vars());
  Poly rem = f;
  // Delta(t^(k+1)) = (k+1)(n+1) t^k + lower terms.
  while (!rem.is_zero()) {
    const int k = rem.degree_in(t_index);
    Poly c = rem.coefficient_in(t_index, k);
    Exponents e(f.vars()->size(), 0);
    e[t_index] = k + 1;
    const Poly term = c * Poly::monomial(f.vars(), e, Rational(1, (k + 1) * (n + 1)));
    u += term;
    rem -= difference(term, t_index, n);
  }
  return u;
}

// ---------------------------------------------------------------- rings

CoeffRing::CoeffRing(VarsPtr ring) : ring_(std::move(ring)) {
  if (ring_->index_of("t")) throw ContextMismatch("ring variables may not include 't'");
  if (ring_->laurent()) throw ContextMismatch("coefficient rings are polynomial rings");
  with_t_ = extend_vars(ring_, "t");
}

Poly CoeffRing::t_coeff(const Poly& p, int k) const {
  return p.coefficient_in(t_index(), k).rebase(ring_);
}

SmithContext::SmithContext(CoeffRing ring, int n, Poly f)
    : ring_(std::move(ring)), n_(n), f_(std::move(f)), u_(ring_.with_t()) {
  if (!(*f_.vars() == *ring_.with_t())) f_ = f_.rebase(ring_.with_t());
  u_ = solve_u(f_, ring_.t_index(), n_);
}

bool SmithContext::same_as(const SmithContext& o) const {
  return this == &o || (ring_ == o.ring_ && n_ == o.n_ && f_ == o.f_);
}

SmithContextPtr make_smith(const VarsPtr& ring, int n, std::string_view f) {
  CoeffRing cr(ring);
  Poly fp = Poly::parse(cr.with_t(), f);
  return std::make_shared<const SmithContext>(std::move(cr), n, std::move(fp));
}

UContext::UContext(CoeffRing ring, int n, Poly u)
    : ring_(std::move(ring)), n_(n), u_(std::move(u)) {
  if (n_ < 0) throw OutOfRange("grading parameter must be non-negative");
  if (!(*u_.vars() == *ring_.with_t())) u_ = u_.rebase(ring_.with_t());
}

bool UContext::same_as(const UContext& o) const {
  return this == &o || (ring_ == o.ring_ && n_ == o.n_ && u_ == o.u_);
}

UContextPtr make_u(const VarsPtr& ring, int n, std::string_view u) {
  CoeffRing cr(ring);
  Poly up = Poly::parse(cr.with_t(), u);
  return std::make_shared<const UContext>(std::move(cr), n, std::move(up));
}

// ---------------------------------------------------------------- formatting

namespace {

std::string power_str(char letter, int e) {
  if (e == 0) return "";
  std::string s(1, letter);
  return e == 1 ? s : s + "^" + std::to_string(e);
}

/// Joins coefficient/monomial pairs as "c*m + ...".
std::string format_terms(const std::vector<std::pair<Poly, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    std::string coeff;
    bool negative = false;
    if (c.is_constant()) {
      const Rational v = c.constant_term();
      negative = v.sign() < 0;
      if (!v.abs().is_one() || mono.empty()) coeff = v.abs().to_string();
    } else if (c.num_terms() == 1) {
      negative = c.leading_coeff().sign() < 0;
      coeff = (negative ? -c : c).to_string();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    os << coeff;
    if (!coeff.empty() && !mono.empty()) os << '*';
    os << mono;
  }
  return os.str();
}

std::string join_monomial(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!s.empty()) s += '*';
    s += p;
  }
  return s;
}

void check_word(std::string_view w) {
  for (char c : w)
    if (c != 'x' && c != 'y' && c != 'e')
      throw ParseError("word letters must be x, y or e: '" + std::string(w) + "'");
}

}  // namespace

std::string Pbw::word() const {
  return std::string(static_cast<std::size_t>(j), 'x') + std::string(static_cast<std::size_t>(i), 'y') +
         std::string(static_cast<std::size_t>(k), 'e');
}

// ---------------------------------------------------------------- SmithElement

SmithElement::SmithElement(SmithContextPtr ctx) : ctx_(std::move(ctx)) {}

SmithElement SmithElement::monomial(SmithContextPtr ctx, Pbw m, const Poly& coeff) {
  SmithElement s(std::move(ctx));
  s.add(m, coeff);
  return s;
}

SmithElement SmithElement::scalar(SmithContextPtr ctx, const Rational& c) {
  Poly r = Poly::constant(ctx->ring().ring(), c);
  return monomial(std::move(ctx), {0, 0, 0}, r);
}

SmithElement SmithElement::e_poly(SmithContextPtr ctx, const Poly& p) {
  SmithElement s(ctx);
  const Poly q = p.rebase(ctx->ring().with_t());
  for (int k = 0; k <= q.degree_in(ctx->ring().t_index()); ++k)
    s.add({0, 0, k}, ctx->ring().t_coeff(q, k));
  return s;
}

void SmithElement::add(const Pbw& m, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SmithElement::check_same(const SmithElement& o) const {
  if (!ctx_->same_as(*o.ctx_)) throw ContextMismatch("Smith elements of different algebras");
}

SmithElement SmithElement::operator-() const {
  SmithElement out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SmithElement& SmithElement::operator+=(const SmithElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

SmithElement& SmithElement::operator-=(const SmithElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

SmithElement& SmithElement::operator*=(const Poly& r) {
  SmithElement out(ctx_);
  for (const auto& [m, c] : terms_) out.add(m, c * r);
  return *this = std::move(out);
}

bool operator==(const SmithElement& a, const SmithElement& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

std::map<int, SmithElement> SmithElement::weight_components() const {
  std::map<int, SmithElement> out;
  for (const auto& [m, c] : terms_)
    out.try_emplace(m.weight(), ctx_).first->second.add(m, c);
  return out;
}

std::string SmithElement::to_string() const {
  std::vector<std::pair<Poly, std::string>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Pbw& m = it->first;
    parts.emplace_back(it->second, join_monomial({power_str('x', m.j), power_str('y', m.i),
                                                  power_str('e', m.k)}));
  }
  return format_terms(parts);
}

namespace {

/// Memoized word reduction for one context and strategy.
class SmithRewriter {
 public:
  SmithRewriter(const SmithContextPtr& ctx, Strategy strategy) : ctx_(ctx), strategy_(strategy) {
    const Poly& f = ctx_->f();
    for (int k = 0; k <= f.degree_in(ctx_->ring().t_index()); ++k) {
      Poly c = ctx_->ring().t_coeff(f, k);
      if (!c.is_zero()) f_terms_.emplace_back(k, std::move(c));
    }
  }

  const SmithElement::Terms& reduce(const std::string& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    SmithElement::Terms out;
    const std::size_t p = inversion(w);
    if (p == std::string::npos) {
      Pbw m;
      for (char c : w) (c == 'x' ? m.j : c == 'y' ? m.i : m.k) += 1;
      out.emplace(m, one());
    } else {
      const std::string pre = w.substr(0, p), post = w.substr(p + 2);
      const std::string pair = w.substr(p, 2);
      const Rational np1(ctx_->n() + 1);
      if (pair == "ex") {
        accumulate(out, pre + "xe" + post, one());
        accumulate(out, pre + "x" + post, one() * np1);
      } else if (pair == "ey") {
        accumulate(out, pre + "ye" + post, one());
        accumulate(out, pre + "y" + post, one() * (-np1));
      } else {  // yx -> xy + f(e)
        accumulate(out, pre + "xy" + post, one());
        for (const auto& [k, c] : f_terms_)
          accumulate(out, pre + std::string(static_cast<std::size_t>(k), 'e') + post, c);
      }
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  Poly one() const { return Poly::constant(ctx_->ring().ring(), 1); }

  static bool inverted(char a, char b) {
    return (a == 'e' && (b == 'x' || b == 'y')) || (a == 'y' && b == 'x');
  }

  std::size_t inversion(const std::string& w) const {
    if (w.size() < 2) return std::string::npos;
    if (strategy_ == Strategy::Leftmost) {
      for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (inverted(w[p], w[p + 1])) return p;
    } else {
      for (std::size_t p = w.size() - 1; p-- > 0;)
        if (inverted(w[p], w[p + 1])) return p;
    }
    return std::string::npos;
  }

  void accumulate(SmithElement::Terms& out, const std::string& w, const Poly& c) {
    const SmithElement::Terms& sub = reduce(w);
    for (const auto& [m, coeff] : sub) {
      Poly v = coeff * c;
      auto [it, inserted] = out.try_emplace(m, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }

  SmithContextPtr ctx_;
  Strategy strategy_;
  std::vector<std::pair<int, Poly>> f_terms_;
  std::unordered_map<std::string, SmithElement::Terms> memo_;
};

}  // namespace

SmithElement rewrite_word(const SmithContextPtr& ctx, std::string_view word, Strategy strategy) {
  check_word(word);
  SmithRewriter rw(ctx, strategy);
  SmithElement out(ctx);
  for (const auto& [m, c] : rw.reduce(std::string(word))) out.add(m, c);
  return out;
}

SmithElement smith_mul(const SmithElement& a, const SmithElement& b, Strategy strategy) {
  if (!a.context()->same_as(*b.context())) throw ContextMismatch("Smith elements of different algebras");
  SmithRewriter rw(a.context(), strategy);
  SmithElement out(a.context());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const Poly c = ca * cb;
      for (const auto& [m, coeff] : rw.reduce(ma.word() + mb.word())) out.add(m, coeff * c);
    }
  return out;
}

SmithElement operator*(const SmithElement& a, const SmithElement& b) { return smith_mul(a, b); }

SmithElement smith_commutator(const SmithElement& a, const SmithElement& b) {
  return a * b - b * a;
}

SmithElement casimir(const SmithContextPtr& ctx) {
  return SmithElement::x(ctx) * SmithElement::y(ctx) - SmithElement::e_poly(ctx, ctx->u());
}

SmithElement casimir2(const SmithContextPtr& ctx) {
  const std::size_t t = ctx->ring().t_index();
  return rewrite_word(ctx, "xy", Strategy::Leftmost) + rewrite_word(ctx, "yx", Strategy::Leftmost) -
         SmithElement::e_poly(ctx, ctx->u().shift(t, Rational(ctx->n() + 1))) -
         SmithElement::e_poly(ctx, ctx->u());
}

namespace {

/// Longest ring-variable name that prefixes s, else one of the letters.
template <class T, class Ring, class Letter>
std::optional<std::pair<T, std::size_t>> match_atom(std::string_view s, const VarsPtr& ring,
                                                    Ring&& ring_atom, Letter&& letter_atom) {
  std::size_t best = 0;
  std::optional<std::size_t> which;
  const std::size_t len = identifier_length(s);
  for (std::size_t i = 0; i < ring->size(); ++i) {
    const std::string& nm = ring->name(i);
    if (nm.size() > best && nm.size() <= len && s.substr(0, nm.size()) == nm) {
      best = nm.size();
      which = i;
    }
  }
  if (which) return std::make_pair(ring_atom(*which), best);
  if (!s.empty() && (s[0] == 'x' || s[0] == 'y' || s[0] == 'e'))
    return std::make_pair(letter_atom(s[0]), std::size_t{1});
  return std::nullopt;
}

}  // namespace

SmithElement parse_smith(const SmithContextPtr& ctx, std::string_view text) {
  const VarsPtr& ring = ctx->ring().ring();
  ExprGrammar<SmithElement> g;
  g.allow_brackets = true;
  g.atom = [&](std::string_view s) {
    return match_atom<SmithElement>(
        s, ring,
        [&](std::size_t i) {
          return SmithElement::monomial(ctx, {0, 0, 0}, Poly::variable(ring, i));
        },
        [&](char c) {
          return c == 'x' ? SmithElement::x(ctx) : c == 'y' ? SmithElement::y(ctx) : SmithElement::e(ctx);
        });
  };
  g.scalar = [&](const Rational& c) { return SmithElement::scalar(ctx, c); };
  g.mul = [](const SmithElement& a, const SmithElement& b) { return a * b; };
  g.pow = [&](const SmithElement& a, int e) {
    if (e < 0) throw ParseError("negative powers are not defined in the Smith algebra");
    SmithElement r = SmithElement::scalar(ctx, 1);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
  };
  return parse_expression(text, g);
}

std::string random_smith_word(Rng& rng, int max_letters) {
  const int len = rng.uniform_int(0, max_letters);
  std::string w;
  for (int i = 0; i < len; ++i) w += "xye"[rng.uniform_int(0, 2)];
  return w;
}

// ---------------------------------------------------------------- UElement

UElement::UElement(UContextPtr ctx) : ctx_(std::move(ctx)) {}

UElement UElement::term(UContextPtr ctx, int weight, const Poly& e_poly) {
  UElement u(std::move(ctx));
  u.add(weight, e_poly);
  return u;
}

UElement UElement::x(UContextPtr ctx, int power) {
  Poly one = Poly::constant(ctx->ring().with_t(), 1);
  return term(std::move(ctx), power, one);
}

UElement UElement::y(UContextPtr ctx, int power) {
  Poly one = Poly::constant(ctx->ring().with_t(), 1);
  return term(std::move(ctx), -power, one);
}

UElement UElement::e(UContextPtr ctx) {
  Poly t = ctx->ring().t();
  return term(std::move(ctx), 0, t);
}

UElement UElement::scalar(UContextPtr ctx, const Rational& c) {
  Poly p = Poly::constant(ctx->ring().with_t(), c);
  return term(std::move(ctx), 0, p);
}

void UElement::add(int weight, const Poly& e_poly) {
  if (e_poly.is_zero()) return;
  const Poly p = e_poly.rebase(ctx_->ring().with_t());
  auto [it, inserted] = terms_.try_emplace(weight, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void UElement::check_same(const UElement& o) const {
  if (!ctx_->same_as(*o.ctx_)) throw ContextMismatch("quotient elements of different algebras");
}

std::map<std::pair<int, int>, Poly> UElement::basis_terms() const {
  std::map<std::pair<int, int>, Poly> out;
  const std::size_t t = ctx_->ring().t_index();
  for (const auto& [w, p] : terms_)
    for (int k = 0; k <= p.degree_in(t); ++k) {
      Poly c = ctx_->ring().t_coeff(p, k);
      if (!c.is_zero()) out.emplace(std::make_pair(w, k), std::move(c));
    }
  return out;
}

UElement UElement::operator-() const {
  UElement out(*this);
  for (auto& [w, p] : out.terms_) p = -p;
  return out;
}

UElement& UElement::operator+=(const UElement& o) {
  check_same(o);
  for (const auto& [w, p] : o.terms_) add(w, p);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  check_same(o);
  for (const auto& [w, p] : o.terms_) add(w, -p);
  return *this;
}

UElement& UElement::operator*=(const Poly& r) {
  const Poly lifted = ctx_->ring().lift(r);
  UElement out(ctx_);
  for (const auto& [w, p] : terms_) out.add(w, p * lifted);
  return *this = std::move(out);
}

bool operator==(const UElement& a, const UElement& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

std::string UElement::to_string() const {
  std::vector<std::pair<Poly, std::string>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::string z = it->first >= 0 ? power_str('x', it->first) : power_str('y', -it->first);
    for (const auto& [key, c] : UElement::term(ctx_, it->first, it->second).basis_terms())
      parts.emplace_back(c, join_monomial({z, power_str('e', key.second)}));
  }
  return format_terms(parts);
}

namespace {

/// Z^w1 Z^w2 = Z^w C(e), with Z^w = x^w (w >= 0) or y^-w (w < 0).
std::pair<int, Poly> z_product(const UContext& ctx, int w1, int w2) {
  const std::size_t t = ctx.ring().t_index();
  const Rational np1(ctx.n() + 1);
  Poly one = Poly::constant(ctx.ring().with_t(), 1);
  if ((w1 >= 0 && w2 >= 0) || (w1 <= 0 && w2 <= 0)) return {w1 + w2, one};
  auto q = [&](int j) {  // x^j y^j
    Poly p = one;
    for (int i = 0; i < j; ++i) p *= ctx.u().shift(t, -Rational(i) * np1);
    return p;
  };
  auto r = [&](int j) {  // y^j x^j
    Poly p = one;
    for (int i = 1; i <= j; ++i) p *= ctx.u().shift(t, Rational(i) * np1);
    return p;
  };
  if (w1 > 0) {
    const int a = w1, b = -w2;
    if (a >= b) return {a - b, q(b)};
    return {-(b - a), q(a).shift(t, -Rational(b - a) * np1)};
  }
  const int a = -w1, b = w2;
  if (a >= b) return {-(a - b), r(b)};
  return {b - a, r(a).shift(t, Rational(b - a) * np1)};
}

}  // namespace

UElement u_mul(const UElement& a, const UElement& b) {
  if (!a.context()->same_as(*b.context()))
    throw ContextMismatch("quotient elements of different algebras");
  const UContext& ctx = *a.context();
  const std::size_t t = ctx.ring().t_index();
  UElement out(a.context());
  for (const auto& [w1, p] : a.terms())
    for (const auto& [w2, q] : b.terms()) {
      // P(e) Z^w2 = Z^w2 P(e + w2(n+1))
      auto [w, c] = z_product(ctx, w1, w2);
      out.add(w, c * p.shift(t, Rational(w2 * (ctx.n() + 1))) * q);
    }
  return out;
}

UElement operator*(const UElement& a, const UElement& b) { return u_mul(a, b); }

namespace {

class URewriter {
 public:
  explicit URewriter(const UContextPtr& ctx) : ctx_(ctx) {
    const std::size_t t = ctx->ring().t_index();
    const Poly& u = ctx->u();
    const Poly us = u.shift(t, Rational(ctx->n() + 1));
    for (int k = 0; k <= u.degree_in(t); ++k) u_terms_.emplace_back(k, ctx->ring().t_coeff(u, k));
    for (int k = 0; k <= us.degree_in(t); ++k)
      us_terms_.emplace_back(k, ctx->ring().t_coeff(us, k));
  }

  /// Normal words are x^a e^k or y^b e^k; result keyed by (weight, k).
  const std::map<std::pair<int, int>, Poly>& reduce(const std::string& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    std::map<std::pair<int, int>, Poly> out;
    std::size_t p = std::string::npos;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const char a = w[i], b = w[i + 1];
      if ((a == 'e' && b != 'e') || (a == 'x' && b == 'y') || (a == 'y' && b == 'x')) {
        p = i;
        break;
      }
    }
    const Poly one = Poly::constant(ctx_->ring().ring(), 1);
    if (p == std::string::npos) {
      int weight = 0, k = 0;
      for (char c : w) (c == 'x' ? ++weight : c == 'y' ? --weight : ++k);
      out.emplace(std::make_pair(weight, k), one);
    } else {
      const std::string pre = w.substr(0, p), post = w.substr(p + 2), pair = w.substr(p, 2);
      const Rational np1(ctx_->n() + 1);
      auto es = [](int k) { return std::string(static_cast<std::size_t>(k), 'e'); };
      if (pair == "ex") {
        accumulate(out, pre + "xe" + post, one);
        accumulate(out, pre + "x" + post, one * np1);
      } else if (pair == "ey") {
        accumulate(out, pre + "ye" + post, one);
        accumulate(out, pre + "y" + post, one * (-np1));
      } else {
        for (const auto& [k, c] : pair == "xy" ? u_terms_ : us_terms_)
          if (!c.is_zero()) accumulate(out, pre + es(k) + post, c);
      }
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  void accumulate(std::map<std::pair<int, int>, Poly>& out, const std::string& w, const Poly& c) {
    const auto& sub = reduce(w);
    for (const auto& [key, coeff] : sub) {
      Poly v = coeff * c;
      auto [it, inserted] = out.try_emplace(key, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }

  UContextPtr ctx_;
  std::vector<std::pair<int, Poly>> u_terms_, us_terms_;
  std::unordered_map<std::string, std::map<std::pair<int, int>, Poly>> memo_;
};

}  // namespace

UElement u_rewrite_word(const UContextPtr& ctx, std::string_view word) {
  check_word(word);
  URewriter rw(ctx);
  UElement out(ctx);
  const Poly t = ctx->ring().t();
  for (const auto& [key, c] : rw.reduce(std::string(word)))
    out.add(key.first, ctx->ring().lift(c) * t.pow(key.second));
  return out;
}

UElement parse_u(const UContextPtr& ctx, std::string_view text) {
  const VarsPtr& ring = ctx->ring().ring();
  ExprGrammar<UElement> g;
  g.allow_brackets = true;
  g.atom = [&](std::string_view s) {
    return match_atom<UElement>(
        s, ring,
        [&](std::size_t i) { return UElement::term(ctx, 0, ctx->ring().lift(Poly::variable(ring, i))); },
        [&](char c) { return c == 'x' ? UElement::x(ctx) : c == 'y' ? UElement::y(ctx) : UElement::e(ctx); });
  };
  g.scalar = [&](const Rational& c) { return UElement::scalar(ctx, c); };
  g.mul = [](const UElement& a, const UElement& b) { return a * b; };
  g.pow = [&](const UElement& a, int e) {
    if (e < 0) throw ParseError("negative powers are not defined in the quotient algebra");
    UElement r = UElement::scalar(ctx, 1);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
  };
  return parse_expression(text, g);
}

UElement project_to_u(const SmithElement& s, const UContextPtr& target) {
  const SmithContext& sc = *s.context();
  if (!(sc.ring() == target->ring()) || sc.n() != target->n())
    throw ContextMismatch("projection between algebras over different rings or gradings");
  if (!(difference(target->u(), target->ring().t_index(), target->n()) == sc.f()))
    throw ContextMismatch("projection requires f(t) = u(t+n+1) - u(t)");
  UElement out(target);
  const Poly t = target->ring().t();
  for (const auto& [m, c] : s.terms())
    out += UElement::x(target, m.j) * UElement::y(target, m.i) * UElement::term(target, 0, t.pow(m.k)) * c;
  return out;
}

bool injectivity_probe(const UContextPtr& ctx, int s, int degree, bool y_side) {
  std::vector<UElement> forms;
  const Poly t = ctx->ring().t();
  const UElement z = y_side ? UElement::y(ctx, s) : UElement::x(ctx, s);
  for (int k = 0; k <= degree; ++k) {
    UElement f = z * UElement::term(ctx, 0, t.pow(k));
    if (f.is_zero()) return false;
    for (const UElement& g : forms)
      if (g == f) return false;
    forms.push_back(std::move(f));
  }
  return true;
}

}  // namespace pvalg
