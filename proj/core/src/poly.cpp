#include "pvalg/poly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "pvalg/errors.hpp"
#include "pvalg/expr_parser.hpp"

namespace pvalg {

// ---------------------------------------------------------------- Vars

Vars::Vars(std::vector<std::string> names, std::optional<std::size_t> laurent)
    : names_(std::move(names)), laurent_(laurent) {
  if (laurent_ && *laurent_ >= names_.size())
    throw OutOfRange("Laurent variable index out of range");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw ParseError("duplicate variable name '" + names_[i] + "'");
}

std::optional<std::size_t> Vars::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Vars::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw OutOfRange("unknown variable '" + std::string(name) + "'");
}

VarsPtr make_vars(std::vector<std::string> names, std::optional<std::size_t> laurent) {
  return std::make_shared<const Vars>(std::move(names), laurent);
}

VarsPtr indexed_vars(std::string_view prefix, std::size_t count) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::size_t>, VarsPtr> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(std::string(prefix), count);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return cache[key] = make_vars(std::move(names));
}

VarsPtr extend_vars(const VarsPtr& base, std::string name) {
  auto names = base->names();
  names.push_back(std::move(name));
  return make_vars(std::move(names), base->laurent());
}

// ---------------------------------------------------------------- order

namespace {

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = 0;
  int db = 0;
  std::size_t first_diff = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
    if (first_diff == a.size() && a[i] != b[i]) first_diff = i;
  }
  if (da != db) return da > db;
  return first_diff < a.size() && a[first_diff] > b[first_diff];
}

// ---------------------------------------------------------------- Poly

namespace {

struct ExponentHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : e) h = (h ^ static_cast<std::size_t>(x + 0x51)) * 0x100000001b3ULL;
    return h;
  }
};

using Accumulator = std::unordered_map<Exponents, Rational, ExponentHash>;

// rows[deg][k] = C(deg,k) c^(deg-k), filled on demand.
const std::vector<Rational>& binomial_row(std::vector<std::vector<Rational>>& rows, int deg,
                                          const Rational& c) {
  const auto d = static_cast<std::size_t>(deg);
  if (rows.size() <= d) rows.resize(d + 1);
  auto& row = rows[d];
  if (row.empty()) {
    row.resize(d + 1);
    Rational cpow(1);
    for (int k = deg; k >= 0; --k) {
      row[static_cast<std::size_t>(k)] = binomial(deg, k) * cpow;
      cpow *= c;
    }
  }
  return row;
}

Poly::TermMap to_term_map(Accumulator&& acc) {
  std::vector<std::pair<Exponents, Rational>> items;
  items.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) items.emplace_back(e, std::move(c));
  const GrlexGreater less;
  std::sort(items.begin(), items.end(),
            [&less](const auto& x, const auto& y) { return less(x.first, y.first); });
  Poly::TermMap out;
  for (auto& item : items) out.emplace_hint(out.end(), std::move(item.first), std::move(item.second));
  return out;
}

}  // namespace


Poly::Poly(VarsPtr vars) : vars_(std::move(vars)) {}

Poly::Poly(VarsPtr vars, TermMap terms) : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) add_term(e, c);
}

Poly Poly::constant(VarsPtr vars, const Rational& c) {
  Poly p(std::move(vars));
  p.add_term(Exponents(p.vars_->size(), 0), c);
  return p;
}

Poly Poly::variable(VarsPtr vars, std::string_view name) {
  const std::size_t i = vars->require(name);
  return variable(std::move(vars), i);
}

Poly Poly::variable(VarsPtr vars, std::size_t index) {
  Exponents e(vars->size(), 0);
  e.at(index) = 1;
  return monomial(std::move(vars), std::move(e));
}

Poly Poly::monomial(VarsPtr vars, Exponents exps, const Rational& c) {
  if (exps.size() != vars->size()) throw ContextMismatch("exponent vector has wrong length");
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] < 0 && vars->laurent() != i)
      throw OutOfRange("negative exponent on non-Laurent variable '" + vars->name(i) + "'");
  Poly p(std::move(vars));
  p.add_term(exps, c);
  return p;
}

Poly Poly::parse(VarsPtr vars, std::string_view text) {
  ExprGrammar<Poly> g;
  g.atom = [&vars](std::string_view s) -> std::optional<std::pair<Poly, std::size_t>> {
    const std::size_t len = identifier_length(s);
    if (len == 0) return std::nullopt;
    auto idx = vars->index_of(s.substr(0, len));
    if (!idx) return std::nullopt;
    return std::make_pair(Poly::variable(vars, *idx), len);
  };
  g.scalar = [&vars](const Rational& c) { return Poly::constant(vars, c); };
  g.mul = [](const Poly& a, const Poly& b) { return a * b; };
  g.pow = [](const Poly& a, int e) { return a.pow(e); };
  return parse_expression(text, g);
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_same(const Poly& o) const {
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
    throw ContextMismatch("polynomials live in different variable contexts");
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                            terms_.begin()->first.end(),
                                            [](int x) { return x == 0; }));
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Exponents(vars_->size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponents& Poly::leading_exponents() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly out(a.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  Accumulator acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Exponents e(a.vars_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = acc.try_emplace(e, ca);
      if (inserted) it->second *= cb;
      else it->second += ca * cb;
    }
  }
  out.terms_ = to_term_map(std::move(acc));
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::pow(int exponent) const {
  if (exponent < 0) {
    if (terms_.size() != 1) throw std::domain_error("negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i] * (-exponent);
    return monomial(vars_, inv, c.pow(exponent));
  }
  Poly result = constant(vars_, Rational(1));
  Poly base = *this;
  unsigned k = static_cast<unsigned>(exponent);
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::shift(std::string_view var, const Rational& c) const {
  return shift(vars_->require(var), c);
}

Poly Poly::shift(std::size_t index, const Rational& c) const {
  if (index >= vars_->size()) throw OutOfRange("shift: variable index out of range");
  if (vars_->laurent() == index)
    throw OutOfRange("shift of the Laurent variable '" + vars_->name(index) + "'");
  if (c.is_zero()) return *this;
  // (v + c)^deg = sum_k row(deg)[k] v^k, row(deg)[k] = C(deg,k) c^(deg-k)
  std::vector<std::vector<Rational>> rows;
  Accumulator acc;
  for (const auto& [e, coeff] : terms_) {
    const int deg = e[index];
    const auto& row = binomial_row(rows, deg, c);
    Exponents f = e;
    for (int k = deg; k >= 0; --k) {
      f[index] = k;
      acc[f] += coeff * row[static_cast<std::size_t>(k)];
    }
  }
  Poly out(vars_);
  out.terms_ = to_term_map(std::move(acc));
  return out;
}

Poly Poly::shear(std::size_t target, std::size_t source, const Rational& c) const {
  if (target >= vars_->size() || source >= vars_->size())
    throw OutOfRange("shear: variable index out of range");
  if (target == source) throw std::invalid_argument("shear: target and source coincide");
  if (vars_->laurent() == target || vars_->laurent() == source)
    throw std::domain_error("shear of a Laurent variable");
  if (c.is_zero()) return *this;
  // (t + c s)^deg = sum_k row(deg)[k] t^k s^(deg-k)
  std::vector<std::vector<Rational>> rows;
  Accumulator acc;
  for (const auto& [e, coeff] : terms_) {
    const int deg = e[target];
    const auto& row = binomial_row(rows, deg, c);
    Exponents f = e;
    for (int k = deg; k >= 0; --k) {
      f[target] = k;
      f[source] = e[source] + deg - k;
      acc[f] += coeff * row[static_cast<std::size_t>(k)];
    }
  }
  Poly out(vars_);
  out.terms_ = to_term_map(std::move(acc));
  return out;
}

Poly Poly::derivative(std::size_t index) const {
  if (index >= vars_->size()) throw OutOfRange("derivative: variable index out of range");
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents f = e;
    f[index] -= 1;
    out.add_term(f, c * Rational(e[index]));
  }
  return out;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != vars_->size())
    throw ContextMismatch("substitute: need one image per variable");
  if (images.empty()) return *this;
  const VarsPtr& target = images[0].vars();
  for (const auto& img : images) img.check_same(images[0]);
  std::vector<std::vector<Poly>> powers(images.size());
  auto power_of = [&](std::size_t i, int k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, Rational(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Poly term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) {
        term *= images[i].pow(e[i]);
      } else if (e[i] > 0) {
        term *= power_of(i, e[i]);
      }
    }
    out += term;
  }
  return out;
}

Poly Poly::evaluate_at(std::size_t index, const Rational& value) const {
  if (index >= vars_->size()) throw OutOfRange("evaluate_at: variable index out of range");
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[index] = 0;
    out.add_term(f, c * value.pow(e[index]));
  }
  return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_->size()) throw ContextMismatch("evaluate: point has wrong dimension");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= point[i].pow(e[i]);
    sum += t;
  }
  return sum;
}

int Poly::degree_in(std::string_view var) const { return degree_in(vars_->require(var)); }

int Poly::degree_in(std::size_t index) const {
  if (index >= vars_->size()) throw OutOfRange("degree_in: variable index out of range");
  if (terms_.empty()) return kNegInfDegree;
  int d = std::numeric_limits<int>::min() + 1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[index]);
  return d;
}

int Poly::min_degree_in(std::size_t index) const {
  if (index >= vars_->size()) throw OutOfRange("min_degree_in: variable index out of range");
  if (terms_.empty()) return kNegInfDegree;
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, e[index]);
  return d;
}

int Poly::total_degree() const {
  if (terms_.empty()) return kNegInfDegree;
  return total(terms_.begin()->first);
}

Poly Poly::coefficient_in(std::size_t index, int power) const {
  if (index >= vars_->size()) throw OutOfRange("coefficient_in: variable index out of range");
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] != power) continue;
    Exponents f = e;
    f[index] = 0;
    out.add_term(f, c);
  }
  return out;
}

Poly Poly::rebase(const VarsPtr& target) const {
  std::vector<std::optional<std::size_t>> map(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) map[i] = target->index_of(vars_->name(i));
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!map[i])
        throw ContextMismatch("rebase: variable '" + vars_->name(i) + "' missing in target");
      if (e[i] < 0 && target->laurent() != *map[i])
        throw ContextMismatch("rebase: negative exponent on non-Laurent target variable");
      f[*map[i]] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

Poly Poly::permute(std::span<const std::size_t> perm) const {
  if (perm.size() != vars_->size()) throw ContextMismatch("permute: wrong permutation size");
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[perm[i]] = e[i];
    out.add_term(f, c);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = vars_->name(i);
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty() || !mag.is_one()) factors.insert(factors.begin(), mag.to_string());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << '*';
      os << factors[i];
    }
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::optional<Poly> divide_exact(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (!(*p.vars() == *q.vars())) throw ContextMismatch("divide_exact: context mismatch");
  const VarsPtr& vars = p.vars();
  Poly quotient(vars);
  if (p.is_zero()) return quotient;

  // Total degree is a grading of the (Laurent) polynomial ring, so an exact
  // quotient has no term of total degree below this bound.
  auto min_total = [](const Poly& x) {
    int m = std::numeric_limits<int>::max();
    for (const auto& [e, c] : x.terms()) m = std::min(m, std::accumulate(e.begin(), e.end(), 0));
    return m;
  };
  const int lower = min_total(p) - min_total(q);

  const Exponents& lq = q.leading_exponents();
  const Rational& cq = q.leading_coeff();
  Poly rem = p;
  while (!rem.is_zero()) {
    const Exponents& lr = rem.leading_exponents();
    Exponents diff(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      diff[i] = lr[i] - lq[i];
      if (diff[i] < 0 && vars->laurent() != i) return std::nullopt;
    }
    if (std::accumulate(diff.begin(), diff.end(), 0) < lower) return std::nullopt;
    const Rational c = rem.leading_coeff() / cq;
    quotient.add_term(diff, c);
    Exponents e(diff.size());
    for (const auto& [eq, coeff] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = diff[i] + eq[i];
      rem.add_term(e, -(c * coeff));
    }
  }
  return quotient;
}

}  // namespace pvalg
