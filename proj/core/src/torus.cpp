#include "pvalg/torus.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pvalg/errors.hpp"

namespace pvalg {

VarsPtr torus_vars(int n) {
  if (n < 0) throw OutOfRange("rank parameter must be non-negative");
  return indexed_vars("X", static_cast<std::size_t>(n) + 1);
}

TorusElement::TorusElement(int n) : n_(n), vars_(torus_vars(n)) {}

TorusElement TorusElement::part(int n, int m, const Poly& p) {
  TorusElement u(n);
  u.add_part(m, p);
  return u;
}

TorusElement TorusElement::scalar(int n, const Rational& c) {
  TorusElement u(n);
  u.add_part(0, Poly::constant(u.vars_, c));
  return u;
}

Poly TorusElement::at(int m) const {
  auto it = parts_.find(m);
  return it == parts_.end() ? Poly(vars_) : it->second;
}

void TorusElement::add_part(int m, const Poly& p) {
  if (p.is_zero()) return;
  if (!(*p.vars() == *vars_)) throw ContextMismatch("torus part lives in the wrong context");
  auto [it, inserted] = parts_.try_emplace(m, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

void TorusElement::check_same(const TorusElement& o) const {
  if (n_ != o.n_)
    throw ContextMismatch("torus elements of rank parameters " + std::to_string(n_) + " and " +
                          std::to_string(o.n_));
}

TorusElement TorusElement::operator-() const {
  TorusElement out(*this);
  for (auto& [m, p] : out.parts_) p = -p;
  return out;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  check_same(o);
  for (const auto& [m, p] : o.parts_) add_part(m, p);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  check_same(o);
  for (const auto& [m, p] : o.parts_) add_part(m, -p);
  return *this;
}

TorusElement& TorusElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    parts_.clear();
    return *this;
  }
  for (auto& [m, p] : parts_) p *= c;
  return *this;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
  a.check_same(b);
  TorusElement out(a.n_);
  for (const auto& [m, p] : a.parts_) {
    for (const auto& [l, q] : b.parts_) out.add_part(m + l, p.shift(0, Rational(l)) * q);
  }
  return out;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  return a.n_ == b.n_ && a.parts_ == b.parts_;
}

TorusElement TorusElement::pow(int e) const {
  if (e < 0) {
    if (parts_.size() != 1 || !parts_.begin()->second.is_constant())
      throw std::domain_error("negative power of a non-unit torus element");
    const auto& [m, p] = *parts_.begin();
    return part(n_, m * e, Poly::constant(vars_, p.constant_term().pow(e)));
  }
  TorusElement result = scalar(n_, Rational(1));
  TorusElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

TorusElement skew_mul(const TorusElement& a, const TorusElement& b) { return a * b; }

TorusElement commutator(const TorusElement& a, const TorusElement& b) { return a * b - b * a; }

TorusElement lemma_closed_form(int i, int l, int j) {
  TorusElement out(0);
  const VarsPtr& v = out.vars();
  for (int p = 0; p <= i; ++p) {
    const Rational c = binomial(i, p) * Rational(l).pow(i - p);
    out.add_part(l, Poly::monomial(v, {p + j}, c));
  }
  return out;
}

TorusElement lemma_word(int i, int l, int j) {
  const VarsPtr v = torus_vars(0);
  const TorusElement theta_i = TorusElement::part(0, 0, Poly::monomial(v, {i}));
  const TorusElement theta_j = TorusElement::part(0, 0, Poly::monomial(v, {j}));
  const TorusElement t_l = TorusElement::part(0, l, Poly::constant(v, 1));
  TorusElement word = theta_i * t_l * theta_j;
  if (!(word == lemma_closed_form(i, l, j)))
    throw std::logic_error("closed form disagrees with the skew product for (" +
                           std::to_string(i) + "," + std::to_string(l) + "," +
                           std::to_string(j) + ")");
  return word;
}

std::vector<CellImage> apply_to_cell(const TorusElement& u, std::span<const Rational> a) {
  if (a.size() != static_cast<std::size_t>(u.n()) + 1)
    throw ContextMismatch("cell has the wrong number of coordinates");
  std::vector<CellImage> out;
  for (const auto& [m, p] : u.parts()) {
    CellImage img{std::vector<Rational>(a.begin(), a.end()), p.evaluate(a)};
    img.cell[0] += Rational(m);
    if (!img.scalar.is_zero()) out.push_back(std::move(img));
  }
  return out;
}

TorusElement radial_restriction(const TorusElement& u) {
  const VarsPtr target = torus_vars(0);
  TorusElement out(0);
  for (const auto& [m, p] : u.parts()) {
    Poly q = p;
    for (std::size_t i = 1; i < p.vars()->size(); ++i) q = q.evaluate_at(i, Rational(0));
    out.add_part(m, q.rebase(target));
  }
  return out;
}

Rational stirling2(int s, int k) {
  if (s < 0 || k < 0) return Rational(0);
  std::vector<std::vector<Rational>> t(static_cast<std::size_t>(s) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(s) + 1));
  t[0][0] = 1;
  for (int a = 1; a <= s; ++a)
    for (int b = 1; b <= a; ++b)
      t[a][b] = Rational(b) * t[a - 1][b] + t[a - 1][b - 1];
  return k > s ? Rational(0) : t[s][k];
}

namespace {

std::string power(const std::string& base, int e) {
  if (e == 0) return "";
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string join_factors(const Poly& coeff, const std::string& a, const std::string& b) {
  std::string s = "[" + coeff.to_string() + "]";
  if (!a.empty()) s += " " + a;
  if (!b.empty()) s += " " + b;
  return s;
}

}  // namespace

std::string render(const TorusElement& u, RenderMode mode) {
  if (u.is_zero()) return "0";
  std::vector<std::string> terms;
  switch (mode) {
    case RenderMode::Pairs:
      for (auto it = u.parts().rbegin(); it != u.parts().rend(); ++it)
        terms.push_back("t^" + std::to_string(it->first) + " (*) [" + it->second.to_string() +
                        "]");
      break;
    case RenderMode::Theta:
      for (auto it = u.parts().rbegin(); it != u.parts().rend(); ++it) {
        const Poly& p = it->second;
        for (int s = p.degree_in(std::size_t{0}); s >= 0; --s) {
          Poly c = p.coefficient_in(0, s);
          if (!c.is_zero())
            terms.push_back(join_factors(c, power("t", it->first), power("(t d/dt)", s)));
        }
      }
      break;
    case RenderMode::Derivative: {
      // t^m (t d/dt)^s = sum_k S(s,k) t^(m+k) (d/dt)^k
      std::map<std::pair<int, int>, Poly, std::greater<>> acc;
      for (const auto& [m, p] : u.parts()) {
        for (int s = 0; s <= p.degree_in(std::size_t{0}); ++s) {
          const Poly c = p.coefficient_in(0, s);
          if (c.is_zero()) continue;
          for (int k = 0; k <= s; ++k) {
            auto key = std::make_pair(m + k, k);
            auto it = acc.try_emplace(key, Poly(u.vars())).first;
            it->second += c * stirling2(s, k);
          }
        }
      }
      for (const auto& [key, c] : acc)
        if (!c.is_zero())
          terms.push_back(join_factors(c, power("t", key.first), power("(d/dt)", key.second)));
      break;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + terms[i];
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const TorusElement& u) { return os << render(u); }

std::string to_json(const TorusElement& u) {
  nlohmann::json j;
  j["version"] = 1;
  j["n"] = u.n();
  j["parts"] = nlohmann::json::array();
  for (const auto& [m, p] : u.parts()) j["parts"].push_back({{"m", m}, {"poly", p.to_string()}});
  return j.dump();
}

TorusElement torus_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    if (j.at("version").get<int>() != 1) throw ParseError("unsupported torus element version");
    TorusElement u(j.at("n").get<int>());
    for (const auto& part : j.at("parts"))
      u.add_part(part.at("m").get<int>(),
                 Poly::parse(u.vars(), part.at("poly").get<std::string>()));
    return u;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed torus element JSON: ") + e.what());
  }
}

}  // namespace pvalg
