#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pvalg/concrete_oracle.hpp"
#include "pvalg/errors.hpp"
#include "pvalg/pv_catalog.hpp"
#include "pvalg/smith.hpp"
#include "pvalg/suites.hpp"
#include "pvalg/sym_harish.hpp"
#include "pvalg/tee.hpp"
#include "pvalg/torus.hpp"

namespace {

using pvalg::Poly;
using pvalg::PVType;
using json = nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Input that parsed as flags but is not meaningful; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PVType select_pv(const std::string& text) {
  try {
    return pvalg::parse_pv(text);
  } catch (const pvalg::Error& e) {
    throw UsageError(std::string("invalid --pv: ") + e.what());
  }
}

pvalg::TorusElement parse_word(const pvalg::TeeContext& ctx, const std::string& word) {
  try {
    return ctx.evaluate(word);
  } catch (const pvalg::ParseError& e) {
    throw UsageError(std::string("invalid --word: ") + e.what());
  }
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_catalog(bool as_json) {
  const auto entries = pvalg::builtin_entries();
  if (as_json) {
    json arr = json::array();
    for (const auto& pv : entries) arr.push_back(json::parse(pv.to_json()));
    print(arr);
    return kPass;
  }
  std::cout << "name    n   k    d\n";
  for (const auto& pv : entries) {
    std::string name = pv.name();
    name.resize(8, ' ');
    std::string n = std::to_string(pv.n);
    n.resize(4, ' ');
    std::string k = std::to_string(pv.k);
    k.resize(5, ' ');
    std::cout << name << n << k << pv.d.to_string() << '\n';
  }
  return kPass;
}

int run_bfunction(const std::string& pv_text, const std::string& word, bool as_json) {
  const PVType pv = select_pv(pv_text);
  const pvalg::TeeContext ctx(pv);
  const pvalg::BFunction b = pvalg::bfunction(parse_word(ctx, word));
  const Poly r = pvalg::gamma_raw(b.poly, pv);
  if (as_json) {
    print({{"pv", pv.name()}, {"word", word}, {"p", b.p}, {"a", b.poly.to_string()}, {"r", r.to_string()}});
  } else {
    std::cout << "pv:   " << pv.name() << "\nword: " << word << "\np:    " << b.p
              << "\nb(a): " << b.poly.to_string() << "\nb(r - rho) in r: " << r.to_string() << '\n';
  }
  return kPass;
}

int run_radial(const std::string& pv_text, const std::string& word, const std::string& mode, bool as_json) {
  const PVType pv = select_pv(pv_text);
  const pvalg::TeeContext ctx(pv);
  const pvalg::TorusElement rad = pvalg::radial_restriction(parse_word(ctx, word));
  if (as_json) {
    print({{"pv", pv.name()}, {"word", word}, {"radial", json::parse(pvalg::to_json(rad))}});
    return kPass;
  }
  pvalg::RenderMode m = pvalg::RenderMode::Pairs;
  if (mode == "theta") m = pvalg::RenderMode::Theta;
  else if (mode == "derivative") m = pvalg::RenderMode::Derivative;
  std::cout << pvalg::render(rad, m) << '\n';
  return kPass;
}

int run_hc(const std::string& pv_text, const std::string& word, const std::string& vars, bool as_json) {
  const PVType pv = select_pv(pv_text);
  const pvalg::TeeContext ctx(pv);
  const Poly g = pvalg::gamma(pvalg::bfunction(parse_word(ctx, word)), pv);
  const Poly shown = vars == "a" ? pvalg::r_to_a(g) : g;
  if (as_json) {
    print({{"pv", pv.name()}, {"word", word}, {"vars", vars}, {"gamma", shown.to_string()},
           {"tau_invariant", pvalg::is_tau_invariant(g)}});
  } else {
    std::cout << "gamma: " << shown.to_string() << "\ntau-invariant: "
              << (pvalg::is_tau_invariant(g) ? "yes" : "no") << '\n';
  }
  return kPass;
}

int run_center_test(const std::string& pv_text, const std::string& poly_text, bool as_json) {
  const PVType pv = select_pv(pv_text);
  const pvalg::TeeContext ctx(pv);
  Poly z(pvalg::r_vars(pv.n));
  try {
    z = Poly::parse(pvalg::r_vars(pv.n), poly_text);
  } catch (const pvalg::Error& e) {
    throw UsageError(std::string("invalid --poly: ") + e.what());
  }
  const bool symmetric = pvalg::is_symmetric(z);
  const bool invariant = pvalg::is_tau_invariant(z);
  const pvalg::TorusElement c = pvalg::TorusElement::part(
      pv.n, 0, Poly(ctx.vars(), pvalg::gamma_inverse(z, pv).terms()));
  const bool with_x = pvalg::commutator(c, ctx.X()).is_zero();
  const bool with_y = pvalg::commutator(c, ctx.Y()).is_zero();
  const bool central = symmetric && with_x && with_y;
  if (as_json) {
    print({{"pv", pv.name()}, {"poly", z.to_string()}, {"symmetric", symmetric},
           {"tau_invariant", invariant}, {"commutes_with_X", with_x}, {"commutes_with_Y", with_y},
           {"central", central}});
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "symmetric:        " << yn(symmetric) << "\ntau-invariant:    " << yn(invariant)
              << "\ncommutes with X:  " << yn(with_x) << "\ncommutes with Y:  " << yn(with_y)
              << "\ncentral:          " << yn(central) << '\n';
  }
  return central ? kPass : kFail;
}

int run_smith_nf(const std::string& word, int n, const std::string& f, const std::string& u, bool as_json) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  const pvalg::VarsPtr ring = pvalg::make_vars({"a", "b"});
  std::string algebra;
  std::string form;
  try {
    if (!u.empty()) {
      algebra = "U";
      form = pvalg::parse_u(pvalg::make_u(ring, n, u), word).to_string();
    } else {
      algebra = "S";
      form = pvalg::parse_smith(pvalg::make_smith(ring, n, f), word).to_string();
    }
  } catch (const pvalg::ParseError& e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    json j{{"algebra", algebra}, {"n", n}, {"word", word}, {"normal_form", form}};
    if (u.empty()) j["f"] = f;
    else j["u"] = u;
    print(j);
  } else {
    std::cout << form << '\n';
  }
  return kPass;
}

int run_oracle(const std::string& model_text, int max_a, bool as_json) {
  std::optional<pvalg::ConcreteModel> model;
  try {
    model = pvalg::parse_model(model_text);
  } catch (const pvalg::Error& e) {
    throw UsageError(std::string("invalid --model: ") + e.what());
  }
  if (max_a < 2) throw UsageError("--max-a must be at least 2");
  const pvalg::CalibrationTable t = pvalg::calibrate_and_check(*model, max_a);
  std::cout << (as_json ? t.to_json() + "\n" : t.to_text());
  return t.passed() ? kPass : kFail;
}

struct VerifyArgs {
  std::string theorem = "all";
  std::string pv;
  int trials = 0;
  std::uint64_t seed = pvalg::kDefaultSeed;
  std::optional<int> n;
  std::string f;
  std::string model;
  int max_a = 4;
};

int run_verify(const VerifyArgs& a, bool as_json) {
  pvalg::SuiteOptions o;
  if (!a.pv.empty()) o.pv = select_pv(a.pv);
  o.seed = a.seed;
  o.trials = a.trials;
  o.n = a.n;
  if (!a.f.empty()) o.f = a.f;
  if (!a.model.empty()) o.model = a.model;
  o.max_a = a.max_a;
  if (o.n && *o.n < 0) throw UsageError("--n must be nonnegative");
  if (o.max_a < 2) throw UsageError("--max-a must be at least 2");

  std::vector<std::string> names;
  if (a.theorem == "all") {
    names = pvalg::suite_names();
  } else {
    const auto& known = pvalg::suite_names();
    if (std::find(known.begin(), known.end(), a.theorem) == known.end())
      throw UsageError("unknown --theorem '" + a.theorem + "'");
    names = {a.theorem};
  }
  std::vector<pvalg::SuiteReport> reports;
  for (const auto& name : names) {
    try {
      auto r = pvalg::run_suite(name, o);
      reports.insert(reports.end(), r.begin(), r.end());
    } catch (const pvalg::ParseError& e) {
      throw UsageError(e.what());
    }
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (as_json) {
    std::cout << pvalg::reports_to_json(reports) << '\n';
  } else {
    for (const auto& r : reports) std::cout << r.to_text();
    std::cout << "overall: " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in algebras of invariant differential operators"};
  app.name("pvalg");
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON");

  std::function<int()> action;

  auto* catalog = app.add_subcommand("catalog", "List builtin prehomogeneous spaces");
  catalog->add_flag("--json", as_json, "Emit JSON");
  catalog->callback([&] { action = [&] { return run_catalog(as_json); }; });

  std::string pv_text;
  std::string word;
  auto* bfn = app.add_subcommand("bfunction", "b-function of a word in a- and r-coordinates");
  bfn->add_option("--pv", pv_text, "family:size, E7 or custom:n:k")->required();
  bfn->add_option("--word", word, "Word over X, Y, Xinv, E")->required();
  bfn->add_flag("--json", as_json, "Emit JSON");
  bfn->callback([&] { action = [&] { return run_bfunction(pv_text, word, as_json); }; });

  std::string mode = "pairs";
  auto* radial = app.add_subcommand("radial", "Radial restriction of a word (X1 = ... = Xn = 0)");
  radial->add_option("--pv", pv_text, "PV selector")->required();
  radial->add_option("--word", word, "Word over X, Y, Xinv, E")->required();
  radial->add_option("--mode", mode, "pairs, theta or derivative")
      ->check(CLI::IsMember({"pairs", "theta", "derivative"}));
  radial->add_flag("--json", as_json, "Emit JSON");
  radial->callback([&] { action = [&] { return run_radial(pv_text, word, mode, as_json); }; });

  std::string vars = "r";
  auto* hc = app.add_subcommand("hc", "Harish-Chandra image of a degree-0 word");
  hc->add_option("--pv", pv_text, "PV selector")->required();
  hc->add_option("--word", word, "Degree-0 word")->required();
  hc->add_option("--vars", vars, "Coordinates of the output: r or a")->check(CLI::IsMember({"r", "a"}));
  hc->add_flag("--json", as_json, "Emit JSON");
  hc->callback([&] { action = [&] { return run_hc(pv_text, word, vars, as_json); }; });

  std::string poly_text;
  auto* center = app.add_subcommand("center-test", "Pull back an r-polynomial and test centrality");
  center->add_option("--pv", pv_text, "PV selector")->required();
  center->add_option("--poly", poly_text, "Polynomial in r0..rn")->required();
  center->add_flag("--json", as_json, "Emit JSON");
  center->callback([&] { action = [&] { return run_center_test(pv_text, poly_text, as_json); }; });

  int n = 1;
  std::string f = "t";
  std::string u;
  auto* smith = app.add_subcommand("smith-nf", "PBW normal form in S(R,f,n) or U(R,u,n), R = Q[a,b]");
  smith->add_option("--word", word, "Expression in x, y, e")->required();
  smith->add_option("--n", n, "Parameter n");
  auto* f_opt = smith->add_option("--f", f, "f(t) for S(R,f,n)");
  smith->add_option("--u", u, "u(t): reduce in U(R,u,n) instead")->excludes(f_opt);
  smith->add_flag("--json", as_json, "Emit JSON");
  smith->callback([&] { action = [&] { return run_smith_nf(word, n, f, u, as_json); }; });

  std::string model = "det:2";
  int max_a = 4;
  auto* oracle = app.add_subcommand("oracle", "Calibrate a concrete model against b_Y");
  oracle->add_option("--model", model, "det:m (m = 2, 3) or quad:k (k >= 3)");
  oracle->add_option("--max-a", max_a, "Largest |a| checked");
  oracle->add_flag("--json", as_json, "Emit JSON");
  oracle->callback([&] { action = [&] { return run_oracle(model, max_a, as_json); }; });

  VerifyArgs va;
  int verify_n = -1;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--theorem", va.theorem, "Suite name or all");
  verify->add_option("--pv", va.pv, "Restrict to one PV");
  verify->add_option("--trials", va.trials, "Random trials per check (0: suite default)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", va.seed, "Random seed");
  auto* vn = verify->add_option("--n", verify_n, "Smith suites: parameter n");
  verify->add_option("--f", va.f, "Smith suites: f(t)");
  verify->add_option("--model", va.model, "Oracle suite: model");
  verify->add_option("--max-a", va.max_a, "Oracle suite: largest |a|");
  verify->add_flag("--json", as_json, "Emit JSON");
  verify->callback([&] {
    if (vn->count() > 0) va.n = verify_n;
    action = [&] { return run_verify(va, as_json); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
