#include "pvalg/concrete_oracle.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"
#include "pvalg/errors.hpp"
#include "pvalg/tee.hpp"

namespace pvalg {

DiffOp::DiffOp(VarsPtr vars) : vars_(std::move(vars)) {}

DiffOp DiffOp::term(const Poly& coeff, Exponents derivs) {
  if (derivs.size() != coeff.vars()->size())
    throw ContextMismatch("DiffOp: derivative vector length differs from the variable count");
  DiffOp op(coeff.vars());
  op.add(derivs, coeff);
  return op;
}

DiffOp DiffOp::derivative(const VarsPtr& vars, Exponents derivs) {
  return term(Poly::constant(vars, Rational(1)), std::move(derivs));
}

DiffOp DiffOp::from_dual(const Poly& q) {
  DiffOp op(q.vars());
  for (const auto& [e, c] : q.terms()) op.add(e, Poly::constant(q.vars(), c));
  return op;
}

void DiffOp::add(const Exponents& derivs, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(derivs, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (!(*vars_ == *o.vars_)) throw ContextMismatch("DiffOp: context mismatch");
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  if (!(*a.vars_ == *b.vars_)) throw ContextMismatch("DiffOp: context mismatch");
  DiffOp out(a.vars_);
  const std::size_t k = a.vars_->size();
  // d^alpha (q d^beta) = sum_{gamma <= alpha} C(alpha,gamma) (d^gamma q) d^(alpha-gamma+beta)
  for (const auto& [alpha, p] : a.terms_) {
    for (const auto& [beta, q] : b.terms_) {
      Exponents gamma(k, 0);
      while (true) {
        Rational weight(1);
        Exponents rest(k);
        for (std::size_t i = 0; i < k; ++i) {
          weight *= binomial(alpha[i], gamma[i]);
          rest[i] = alpha[i] - gamma[i] + beta[i];
        }
        out.add(rest, p * derive(q, gamma) * weight);
        std::size_t i = 0;
        while (i < k && gamma[i] == alpha[i]) gamma[i++] = 0;
        if (i == k) break;
        ++gamma[i];
      }
    }
  }
  return out;
}

Poly derive(const Poly& p, const Exponents& alpha) {
  if (alpha.size() != p.vars()->size()) throw ContextMismatch("derive: exponent length mismatch");
  Poly out = p;
  for (std::size_t i = 0; i < alpha.size() && !out.is_zero(); ++i)
    for (int t = 0; t < alpha[i] && !out.is_zero(); ++t) out = out.derivative(i);
  return out;
}

Poly apply(const DiffOp& op, const Poly& p) {
  if (!(*op.vars() == *p.vars())) throw ContextMismatch("apply: operator and polynomial contexts differ");
  Poly out(p.vars());
  for (const auto& [alpha, c] : op.terms()) {
    const Poly d = derive(p, alpha);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

DiffOp euler_operator(const VarsPtr& vars) {
  DiffOp op(vars);
  for (std::size_t i = 0; i < vars->size(); ++i) {
    Exponents e(vars->size(), 0);
    e[i] = 1;
    op += DiffOp::term(Poly::variable(vars, i), e);
  }
  return op;
}

namespace {

std::vector<std::string> numbered(std::string_view prefix, int count) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

Poly det_of(const VarsPtr& v, const std::vector<std::vector<std::size_t>>& idx) {
  const std::size_t m = idx.size();
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  Poly out(v);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Exponents e(v->size(), 0);
    for (std::size_t i = 0; i < m; ++i) ++e[idx[i][perm[i]]];
    out += Poly::monomial(v, e, Rational(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

ConcreteModel quadratic_model(int k) {
  if (k < 3) throw OutOfRange("quadratic_model needs k >= 3");
  const VarsPtr v = make_vars(numbered("x", k));
  auto x = [&](int i) { return Poly::variable(v, static_cast<std::size_t>(i - 1)); };
  Poly q(v);
  Poly dual(v);
  for (int i = 1; i + 1 <= k; i += 2) {
    q += x(i) * x(i + 1);
    dual += x(i) * x(i + 1);
  }
  if (k % 2 == 1) {
    q += x(k) * x(k);
    dual += x(k) * x(k) * Rational(1, 4);
  }
  ConcreteModel model{quadratic(k), "quad:" + std::to_string(k), v, q, x(1),
                      DiffOp::from_dual(dual), euler_operator(v), std::nullopt};
  return model;
}

ConcreteModel det_model(int m) {
  if (m < 2 || m > 3) throw OutOfRange("det_model needs 2 <= m <= 3");
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
  const VarsPtr v = make_vars(names);
  auto grid = [&](int size) {
    std::vector<std::vector<std::size_t>> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) idx[static_cast<std::size_t>(i)].push_back(static_cast<std::size_t>(i * m + j));
    return idx;
  };
  const Poly det = det_of(v, grid(m));
  const Poly minor = det_of(v, grid(m - 1));
  return ConcreteModel{builtin(Family::A, m), "det:" + std::to_string(m), v, det, minor,
                       DiffOp::from_dual(det), euler_operator(v), std::nullopt};
}

ConcreteModel parse_model(std::string_view selector) {
  const auto colon = selector.find(':');
  if (colon == std::string_view::npos) throw ParseError("model must be det:m or quad:k, got '" + std::string(selector) + "'");
  const std::string_view kind = selector.substr(0, colon);
  const std::string_view num = selector.substr(colon + 1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc() || ptr != num.data() + num.size())
    throw ParseError("bad model size in '" + std::string(selector) + "'");
  if (kind == "det") return det_model(value);
  if (kind == "quad" || kind == "quadratic") return quadratic_model(value);
  throw ParseError("unknown model kind '" + std::string(kind) + "'");
}

namespace {

std::pair<int, int> cell_of(const ConcreteModel& model, const std::vector<int>& a) {
  if (a.empty() || a.size() > static_cast<std::size_t>(model.pv.n + 1))
    throw OutOfRange("cell needs between 1 and n+1 entries");
  for (std::size_t i = 2; i < a.size(); ++i)
    if (a[i] != 0) throw OutOfRange("only cells built from D0 and D1 are available");
  for (int x : a)
    if (x < 0) throw OutOfRange("cell exponents must be nonnegative");
  return {a[0], a.size() > 1 ? a[1] : 0};
}

Poly cell_poly(const ConcreteModel& model, int a0, int a1) {
  return model.delta0.pow(a0) * model.delta1.pow(a1);
}

Rational formula_at(const TeeContext& tee, int a0, int a1) {
  std::vector<Rational> point(static_cast<std::size_t>(tee.n() + 1), Rational(0));
  point[0] = Rational(a0);
  if (point.size() > 1) point[1] = Rational(a1);
  return tee.b_Y().evaluate(point);
}

}  // namespace

Rational empirical_b(const ConcreteModel& model, const std::vector<int>& a) {
  const auto [a0, a1] = cell_of(model, a);
  const Poly image = apply(model.y_op, cell_poly(model, a0, a1));
  if (image.is_zero()) return Rational(0);
  if (a0 == 0)
    throw NotProportional("Y does not kill the harmonic cell (0," + std::to_string(a1) + ")");
  const Poly base = cell_poly(model, a0 - 1, a1);
  const Rational s = image.leading_coeff() / base.leading_coeff();
  if (!(image == base * s))
    throw NotProportional("Y(D^a) is not a multiple of D^(a-e0) at a=(" + std::to_string(a0) + "," +
                          std::to_string(a1) + ")");
  return s;
}

bool CalibrationTable::passed() const {
  if (!euler_ok) return false;
  for (const auto& r : rows)
    if (!r.match) return false;
  return true;
}

std::string CalibrationTable::to_json() const {
  nlohmann::json j;
  j["model"] = model;
  j["c"] = c.to_string();
  j["fitted"] = fitted;
  j["euler_ok"] = euler_ok;
  j["passed"] = passed();
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"a", {r.a0, r.a1}},
                         {"empirical", r.empirical ? nlohmann::json(r.empirical->to_string()) : nlohmann::json()},
                         {"formula", r.formula.to_string()},
                         {"expected", (c * r.formula).to_string()},
                         {"match", r.match},
                         {"euler", r.euler}});
  }
  return j.dump(2);
}

std::string CalibrationTable::to_text() const {
  std::ostringstream os;
  os << "model " << model << "  c = " << c.to_string() << (fitted ? " (fitted at a=(1,0))" : " (given)")
     << '\n';
  os << "a          empirical      c*b_Y(a)       match\n";
  for (const auto& r : rows) {
    std::ostringstream cell;
    cell << "(" << r.a0 << "," << r.a1 << ")";
    os << cell.str() << std::string(11 - std::min<std::size_t>(10, cell.str().size()), ' ');
    const std::string emp = r.empirical ? r.empirical->to_string() : "not proportional";
    os << emp << std::string(15 - std::min<std::size_t>(14, emp.size()), ' ');
    const std::string exp = (c * r.formula).to_string();
    os << exp << std::string(15 - std::min<std::size_t>(14, exp.size()), ' ');
    os << (r.match ? "yes" : "NO") << (r.euler ? "" : "  (Euler mismatch)") << '\n';
  }
  os << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

CalibrationTable calibrate_and_check(const ConcreteModel& model, int max_a) {
  if (max_a < 2) throw OutOfRange("calibrate_and_check needs max_a >= 2");
  const TeeContext tee(model.pv);
  CalibrationTable table;
  table.model = model.name;
  if (model.calibration) {
    table.c = *model.calibration;
    table.fitted = false;
  } else {
    table.c = empirical_b(model, {1, 0}) / formula_at(tee, 1, 0);
  }
  const int n = model.pv.n;
  for (int total = 0; total <= max_a; ++total) {
    for (int a0 = total; a0 >= 0; --a0) {
      CalibrationRow row;
      row.a0 = a0;
      row.a1 = total - a0;
      row.formula = formula_at(tee, row.a0, row.a1);
      try {
        row.empirical = empirical_b(model, {row.a0, row.a1});
      } catch (const NotProportional&) {
      }
      row.match = row.empirical && *row.empirical == table.c * row.formula;
      const Poly p = cell_poly(model, row.a0, row.a1);
      row.euler = apply(model.e_op, p) == p * Rational((n + 1) * row.a0 + n * row.a1);
      table.euler_ok = table.euler_ok && row.euler;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace pvalg
