#include "pvalg/suites.hpp"

#include <functional>
#include <map>

#include "pvalg/concrete_oracle.hpp"
#include "pvalg/errors.hpp"
#include "pvalg/iso_bridge.hpp"
#include "pvalg/linalg.hpp"
#include "pvalg/random.hpp"
#include "pvalg/smith.hpp"
#include "pvalg/sym_harish.hpp"
#include "pvalg/tee.hpp"
#include "pvalg/torus.hpp"

namespace pvalg {

namespace {

int trials_or(const SuiteOptions& o, int fallback) { return o.trials > 0 ? o.trials : fallback; }

std::vector<PVType> targets(const SuiteOptions& o) {
  if (o.pv) return {*o.pv};
  std::vector<PVType> out;
  for (const auto& pv : builtin_entries())
    if (pv.n <= 3) out.push_back(pv);
  return out;
}

SuiteReport start(std::string suite, std::string target, const SuiteOptions& o, int trials) {
  SuiteReport r;
  r.suite = std::move(suite);
  r.target = std::move(target);
  r.seed = o.seed;
  r.trials = trials;
  return r;
}

// Records one check that must hold on every trial; the first failure's detail is kept.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void expect(bool ok, const std::function<std::string()>& detail) {
    ++count_;
    if (!ok && passed_) {
      passed_ = false;
      detail_ = detail();
    }
  }
  void finish(SuiteReport& r) const {
    r.add(name_, passed_, passed_ ? std::to_string(count_) + " cases" : detail_);
  }

 private:
  std::string name_;
  bool passed_ = true;
  int count_ = 0;
  std::string detail_;
};

std::uint64_t sub_seed(std::uint64_t seed, const std::string& target) {
  return seed ^ (std::hash<std::string>{}(target) * 0x9e3779b97f4a7c15ULL);
}

// ---------------------------------------------------------------- T suites

SuiteReport grading_suite(const PVType& pv, const SuiteOptions& o) {
  const int trials = trials_or(o, 50);
  SuiteReport rep = start("grading", pv.name(), o, trials);
  const TeeContext ctx(pv);
  Rng rng(sub_seed(o.seed, pv.name()));

  Tally graded("[E,u] = p(n+1)u for homogeneous u");
  Tally x_tau("X R = tau(R) X");
  Tally y_tau("R Y = Y tau(R)");
  Tally t_round("decompose_T round-trips");
  Tally t0xy_round("decompose_T0XY round-trips");
  for (int i = 0; i < trials; ++i) {
    const int p = rng.uniform_int(-3, 3);
    const TorusElement u = random_T0(ctx, rng) * ctx.x_power(p);
    const TorusElement lhs = commutator(ctx.E(), u);
    graded.expect(lhs == u * Rational(p * (pv.n + 1)), [&] { return render(u); });

    const TorusElement r = random_T0(ctx, rng);
    x_tau.expect(ctx.X() * r == tau(r) * ctx.X(), [&] { return render(r); });
    y_tau.expect(r * ctx.Y() == ctx.Y() * tau(r), [&] { return render(r); });

    const TorusElement w = random_T(ctx, rng, 3, true);
    t_round.expect(recompose_T(ctx, decompose_T(ctx, w)) == w, [&] { return render(w); });

    const TorusElement v = random_T(ctx, rng, 3, false);
    t0xy_round.expect(recompose_T0XY(ctx, decompose_T0XY(ctx, v)) == v, [&] { return render(v); });
  }
  graded.finish(rep);
  x_tau.finish(rep);
  y_tau.finish(rep);
  t_round.finish(rep);
  t0xy_round.finish(rep);

  bool rejected = false;
  try {
    decompose_T0XY(ctx, ctx.Xinv());
  } catch (const NotInT0XY&) {
    rejected = true;
  }
  rep.add("Xinv is not in T0[X,Y]", rejected);

  const Poly by = Poly(a_vars(pv.n), ctx.b_Y().terms());
  const Poly by_next = by.shift(0, Rational(1));
  const BFunction bxy = bfunction(ctx.X() * ctx.Y());
  const BFunction byx = bfunction(ctx.Y() * ctx.X());
  rep.add("b_XY(a) = b_Y(a)", bxy.p == 0 && bxy.poly == by, bxy.poly.to_string());
  rep.add("b_YX(a) = b_Y(a + e0)", byx.p == 0 && byx.poly == by_next, byx.poly.to_string());
  if (pv.n == 1) {
    const BFunction comm = bfunction(commutator(ctx.Y(), ctx.X()));
    const Poly expected =
        Poly(a_vars(1), ctx.b_E().terms()) + Poly::constant(a_vars(1), Rational(pv.k, 2));
    rep.add("b_[Y,X] = b_E + k/2", comm.poly == expected, comm.poly.to_string());
  }
  return rep;
}

SuiteReport t0_suite(const PVType& pv, const SuiteOptions& o) {
  const int trials = trials_or(o, 50);
  SuiteReport rep = start("t0-commutative", pv.name(), o, trials);
  const TeeContext ctx(pv);
  Rng rng(sub_seed(o.seed, pv.name()));
  Tally comm("degree-0 words commute");
  Tally mult("gamma is multiplicative on T0");
  for (int i = 0; i < trials; ++i) {
    const TorusElement a = ctx.evaluate(random_word(rng, 0, 4));
    const TorusElement b = ctx.evaluate(random_word(rng, 0, 4));
    comm.expect(commutator(a, b).is_zero(), [&] { return render(a) + " ; " + render(b); });
    mult.expect(gamma(bfunction(a * b), pv) == gamma(bfunction(a), pv) * gamma(bfunction(b), pv),
                [&] { return render(a) + " ; " + render(b); });
  }
  comm.finish(rep);
  mult.finish(rep);
  return rep;
}

SuiteReport degree_suite(const PVType& pv, const SuiteOptions& o) {
  SuiteReport rep = start("degree-growth", pv.name(), o, 5);
  const TeeContext ctx(pv);
  for (int q = 1; q <= 5; ++q) {
    const BFunction b = hq_sequence(ctx, q);
    const int got = b.poly.degree_in(0);
    const int want = hq_expected_degree(pv.n, q);
    rep.add("deg_a0 b_H" + std::to_string(q) + " = " + std::to_string(want), got == want,
            "got " + std::to_string(got));
  }
  return rep;
}

SuiteReport hc_suite(const PVType& pv, const SuiteOptions& o) {
  SuiteReport rep = start("hc-generators", pv.name(), o, 1);
  const TeeContext ctx(pv);
  Rng rng(sub_seed(o.seed, pv.name()));
  const VarsPtr rv = r_vars(pv.n);
  std::vector<Poly> gens;
  for (int l = 0; l <= pv.n; ++l) {
    const TorusElement dl = ctx.x_power(1 - l) * ctx.Y() * ctx.x_power(l);
    const Poly g = gamma_raw(bfunction(dl).poly, pv);
    Poly expected = Poly::constant(rv, 1);
    const Rational shift = pv.d / Rational(4) * Rational(pv.n) + Rational(l);
    for (int i = 0; i <= pv.n; ++i)
      expected *= Poly::variable(rv, static_cast<std::size_t>(i)) + Poly::constant(rv, shift);
    rep.add("gamma(D" + std::to_string(l) + ") = prod(r_i + dn/4 + " + std::to_string(l) + ")",
            g == expected, g.to_string());
    rep.add("gamma(D" + std::to_string(l) + ") is symmetric", is_symmetric(g));
    gens.push_back(g);
  }
  std::vector<Rational> point;
  for (int i = 0; i <= pv.n; ++i) point.push_back(rng.rational(1000, 97));
  const Rational jac = jacobian_determinant(gens, point);
  rep.add("Jacobian of the generators is nonsingular", !jac.is_zero(), "det = " + jac.to_string());
  Rational rho_sum(0);
  for (const auto& r : rho_vector(pv.n, pv.d)) rho_sum += r;
  rep.add("sum of rho is zero", rho_sum.is_zero(), rho_sum.to_string());
  rep.add("gamma(E) = sigma0", gamma(bfunction(ctx.E()), pv) == sigma0(pv.n));
  return rep;
}

TorusElement pull_back(const TeeContext& ctx, const Poly& z) {
  return TorusElement::part(ctx.n(), 0, Poly(ctx.vars(), gamma_inverse(z, ctx.pv()).terms()));
}

SuiteReport center_suite(const PVType& pv, const SuiteOptions& o) {
  const int trials = trials_or(o, 20);
  SuiteReport rep = start("center", pv.name(), o, trials);
  const TeeContext ctx(pv);
  Rng rng(sub_seed(o.seed, pv.name()));
  Tally central("tau-invariant symmetric images commute with X and Y");
  Tally y_auto("is_central implies commuting with Y");
  Tally fails("non-tau-invariant symmetric images fail with X");
  for (int i = 0; i < trials; ++i) {
    const Poly z = random_central(rng, pv.n, 3);
    const TorusElement c = pull_back(ctx, z);
    central.expect(commutator(c, ctx.X()).is_zero() && commutator(c, ctx.Y()).is_zero(),
                   [&] { return z.to_string(); });
    y_auto.expect(!is_central(ctx, c) || commutator(c, ctx.Y()).is_zero(), [&] { return z.to_string(); });

    Poly s(r_vars(pv.n));
    do s = symmetrize(rng.poly(r_vars(pv.n), 3, 3));
    while (is_tau_invariant(s));
    const TorusElement nc = pull_back(ctx, s);
    fails.expect(!commutator(nc, ctx.X()).is_zero() && !is_central(ctx, nc),
                 [&] { return s.to_string(); });
  }
  central.finish(rep);
  y_auto.finish(rep);
  fails.finish(rep);
  return rep;
}

SuiteReport tau_suite(const PVType& pv, const SuiteOptions& o) {
  const int trials = trials_or(o, 20);
  SuiteReport rep = start("tau-ideals", pv.name(), o, trials);
  const TeeContext ctx(pv);
  Rng rng(sub_seed(o.seed, pv.name()));
  const Poly sig = sigma0(pv.n);
  Tally expansion("decompose_tau re-expands exactly with tau-invariant parts");
  Tally fixed("tau-invariant input is its own decomposition");
  Tally multiple("multiples of sigma0 have zero alpha_0");
  Tally ideal("X^i g = g X^i for tau-invariant g");
  Tally gens("generator pairs are tau-invariant and recombine");
  for (int i = 0; i < trials; ++i) {
    const Poly s = symmetrize(rng.poly(r_vars(pv.n), 3, 3));
    const auto alphas = decompose_tau(s);
    Poly sum(s.vars());
    bool invariant = true;
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      sum += alphas[j] * sig.pow(static_cast<int>(j));
      invariant = invariant && is_tau_invariant(alphas[j]);
    }
    expansion.expect(sum == s && invariant, [&] { return s.to_string(); });

    const Poly z = random_central(rng, pv.n, 3);
    const auto zs = decompose_tau(z);
    fixed.expect(zs.size() == 1 && zs[0] == z, [&] { return z.to_string(); });
    multiple.expect(decompose_tau(s * sig).front().is_zero(), [&] { return s.to_string(); });

    const TorusElement g = pull_back(ctx, z);
    const int power = rng.uniform_int(1, 3);
    ideal.expect(tau(g) == g && ctx.x_power(power) * g == g * ctx.x_power(power),
                 [&] { return z.to_string(); });

    const std::vector<Poly> in{s};
    Poly recombined(s.vars());
    bool ok = true;
    for (const auto& [gen, p] : tau_invariant_generators(in)) {
      ok = ok && is_tau_invariant(gen);
      recombined += gen * sig.pow(p);
    }
    gens.expect(ok && recombined == s, [&] { return s.to_string(); });
  }
  expansion.finish(rep);
  fixed.finish(rep);
  multiple.finish(rep);
  ideal.finish(rep);
  gens.finish(rep);
  return rep;
}

// ---------------------------------------------------------------- Smith suites

const VarsPtr& smith_ring() {
  static const VarsPtr ring = make_vars({"a", "b"});
  return ring;
}

std::vector<int> smith_ns(const SuiteOptions& o) {
  if (o.n) return {*o.n};
  return {0, 1, 2};
}

std::string smith_f(const SuiteOptions& o) { return o.f.value_or("a*t^2+b*t+1"); }

Poly random_e_poly(Rng& rng, const CoeffRing& ring, int degree) {
  Poly p(ring.with_t());
  for (int k = 0; k <= degree; ++k) p += ring.lift(rng.poly(ring.ring(), 2, 1)) * ring.t().pow(k);
  return p;
}

SuiteReport smith_pbw_suite(int n, const SuiteOptions& o) {
  const int trials = trials_or(o, 100);
  const std::string f = smith_f(o);
  SuiteReport rep = start("smith-pbw", "n=" + std::to_string(n) + " f=" + f, o, trials);
  const auto ctx = make_smith(smith_ring(), n, f);
  const CoeffRing& ring = ctx->ring();
  Rng rng(sub_seed(o.seed, rep.target));

  Tally confluence("leftmost and rightmost rewriting agree");
  for (int i = 0; i < trials; ++i) {
    const std::string word = random_smith_word(rng, 4) + random_smith_word(rng, 4);
    confluence.expect(rewrite_word(ctx, word, Strategy::Leftmost) ==
                          rewrite_word(ctx, word, Strategy::Rightmost),
                      [&] { return word; });
  }
  confluence.finish(rep);

  // Freeness: the 27 normal forms of y^i x^j e^k have independent coefficient vectors.
  std::vector<SmithElement> forms;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k)
        forms.push_back(rewrite_word(ctx, std::string(i, 'y') + std::string(j, 'x') + std::string(k, 'e'),
                                     Strategy::Leftmost));
  std::map<std::pair<Pbw, Exponents>, std::size_t> columns;
  for (const auto& form : forms)
    for (const auto& [m, coeff] : form.terms())
      for (const auto& [e, r] : coeff.terms()) columns.try_emplace({m, e}, columns.size());
  Matrix mat(forms.size(), std::vector<Rational>(columns.size()));
  for (std::size_t row = 0; row < forms.size(); ++row)
    for (const auto& [m, coeff] : forms[row].terms())
      for (const auto& [e, r] : coeff.terms()) mat[row][columns.at({m, e})] = r;
  const std::size_t rank = matrix_rank(mat);
  rep.add("27 PBW monomials are independent", rank == forms.size(), "rank " + std::to_string(rank));

  Tally shifts("P(e)x = xP(e+n+1) and P(e+n+1)y = yP(e)");
  Tally grading("weight is a grading");
  Tally solve("f(t) = u(t+n+1) - u(t) for solve_u");
  const int small = std::max(1, trials / 5);
  for (int i = 0; i < small; ++i) {
    const Poly p = random_e_poly(rng, ring, rng.uniform_int(0, 5));
    const SmithElement pe = SmithElement::e_poly(ctx, p);
    const SmithElement ps = SmithElement::e_poly(ctx, p.shift(ring.t_index(), Rational(n + 1)));
    shifts.expect(pe * SmithElement::x(ctx) == SmithElement::x(ctx) * ps &&
                      ps * SmithElement::y(ctx) == SmithElement::y(ctx) * pe,
                  [&] { return p.to_string(); });

    const SmithElement a = rewrite_word(ctx, random_smith_word(rng, 3), Strategy::Leftmost);
    const SmithElement b = rewrite_word(ctx, random_smith_word(rng, 3), Strategy::Leftmost);
    bool graded = true;
    for (const auto& [na, ca] : a.weight_components())
      for (const auto& [nb, cb] : b.weight_components()) {
        const auto prod = (ca * cb).weight_components();
        graded = graded && prod.size() <= 1 && (prod.empty() || prod.begin()->first == na + nb);
      }
    grading.expect(graded, [&] { return a.to_string() + " ; " + b.to_string(); });

    const Poly g = random_e_poly(rng, ring, rng.uniform_int(0, 4));
    const Poly u = solve_u(g, ring.t_index(), n);
    solve.expect(difference(u, ring.t_index(), n) == g, [&] { return g.to_string(); });
  }
  shifts.finish(rep);
  grading.finish(rep);
  solve.finish(rep);
  return rep;
}

SuiteReport casimir_suite(int n, const SuiteOptions& o) {
  const int trials = trials_or(o, 50);
  const std::string f = smith_f(o);
  SuiteReport rep = start("casimir", "n=" + std::to_string(n) + " f=" + f, o, trials);
  const auto ctx = make_smith(smith_ring(), n, f);
  const CoeffRing& ring = ctx->ring();
  Rng rng(sub_seed(o.seed, rep.target));
  const SmithElement om = casimir(ctx);
  rep.add("Omega_1 commutes with x, y, e",
          smith_commutator(om, SmithElement::x(ctx)).is_zero() &&
              smith_commutator(om, SmithElement::y(ctx)).is_zero() &&
              smith_commutator(om, SmithElement::e(ctx)).is_zero(),
          om.to_string());
  rep.add("Omega_2 = 2 Omega_1", casimir2(ctx) == om * Poly::constant(ring.ring(), 2));

  Tally central("a Omega_1 = Omega_1 a");
  Tally quotient("projection to U is multiplicative");
  const auto uc = make_u(smith_ring(), n, ctx->u().to_string());
  for (int i = 0; i < trials; ++i) {
    SmithElement a = rewrite_word(ctx, random_smith_word(rng, 4), Strategy::Leftmost) *
                     rng.nonzero_poly(ring.ring(), 2, 1);
    a += rewrite_word(ctx, random_smith_word(rng, 3), Strategy::Rightmost);
    central.expect((a * om - om * a).is_zero(), [&] { return a.to_string(); });
    const SmithElement b = rewrite_word(ctx, random_smith_word(rng, 3), Strategy::Rightmost);
    quotient.expect(project_to_u(a * b, uc) == project_to_u(a, uc) * project_to_u(b, uc),
                    [&] { return a.to_string() + " ; " + b.to_string(); });
  }
  central.finish(rep);
  quotient.finish(rep);
  rep.add("Omega_1 projects to zero", project_to_u(om, uc).is_zero());
  return rep;
}

// ---------------------------------------------------------------- iso, oracle

SuiteReport iso_suite(const PVType& pv, const SuiteOptions& o) {
  return verify_iso(pv, trials_or(o, 100), o.seed);
}

SuiteReport oracle_suite(const ConcreteModel& model, const SuiteOptions& o) {
  SuiteReport rep = start("oracle", model.name, o, 0);
  const CalibrationTable t = calibrate_and_check(model, o.max_a);
  rep.trials = static_cast<int>(t.rows.size());
  for (const auto& row : t.rows) {
    const std::string cell = "(" + std::to_string(row.a0) + "," + std::to_string(row.a1) + ")";
    rep.add("Y(D^a) = c b_Y(a) D^(a-e0) at a=" + cell, row.match,
            (row.empirical ? row.empirical->to_string() : std::string("not proportional")) + " vs " +
                (t.c * row.formula).to_string());
  }
  rep.add("Euler operator has eigenvalue (n+1)a0 + n a1", t.euler_ok);
  rep.add("calibration constant", true, "c = " + t.c.to_string());
  if (model.pv.family == Family::A) {
    const TeeContext ctx(model.pv);
    // prod_{j=2}^{m} (t d/dt + j) (d/dt) with d/dt = (-1, X0)
    const int m = model.pv.size;
    const VarsPtr v0 = torus_vars(0);
    TorusElement rais = TorusElement::part(0, -1, Poly::variable(v0, 0));
    for (int j = m; j >= 2; --j)
      rais = TorusElement::part(0, 0, Poly::variable(v0, 0) + Poly::constant(v0, j)) * rais;
    const TorusElement radial = radial_restriction(ctx.Y());
    rep.add("radial restriction of Y equals the Rais operator", radial == rais,
            render(radial) + " vs " + render(rais));
  }
  return rep;
}

std::vector<ConcreteModel> oracle_models(const SuiteOptions& o) {
  if (o.model) return {parse_model(*o.model)};
  std::vector<ConcreteModel> out;
  for (const char* name : {"det:2", "det:3", "quad:3", "quad:4", "quad:5", "quad:6"})
    out.push_back(parse_model(name));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"grading",   "t0-commutative", "degree-growth",
                                              "hc-generators", "center",     "tau-ideals",
                                              "smith-pbw", "casimir",        "iso",
                                              "oracle"};
  return names;
}

std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& o) {
  std::vector<SuiteReport> out;
  auto per_pv = [&](auto&& fn) {
    for (const auto& pv : targets(o)) out.push_back(fn(pv, o));
  };
  auto per_n = [&](auto&& fn) {
    for (int n : smith_ns(o)) out.push_back(fn(n, o));
  };
  if (name == "grading") per_pv(grading_suite);
  else if (name == "t0-commutative") per_pv(t0_suite);
  else if (name == "degree-growth") per_pv(degree_suite);
  else if (name == "hc-generators") per_pv(hc_suite);
  else if (name == "center") per_pv(center_suite);
  else if (name == "tau-ideals") per_pv(tau_suite);
  else if (name == "smith-pbw") per_n(smith_pbw_suite);
  else if (name == "casimir") per_n(casimir_suite);
  else if (name == "iso") per_pv(iso_suite);
  else if (name == "oracle")
    for (const auto& m : oracle_models(o)) out.push_back(oracle_suite(m, o));
  else throw OutOfRange("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace pvalg
