#include "pvalg/iso_bridge.hpp"

#include "pvalg/errors.hpp"
#include "pvalg/linalg.hpp"
#include "pvalg/sym_harish.hpp"

namespace pvalg {

UxyPresentation build_u_xy(const PVType& pv) {
  const TeeContext tee(pv);
  const Poly g = gamma(bfunction(tee.X() * tee.Y()), pv);
  UxyPresentation pres{pv, decompose_tau(g), nullptr};
  CoeffRing ring(r_vars(pv.n));
  Poly u(ring.with_t());
  for (std::size_t j = 0; j < pres.beta.size(); ++j)
    u += ring.lift(pres.beta[j]) * ring.t().pow(static_cast<int>(j));
  pres.context = std::make_shared<const UContext>(std::move(ring), pv.n, std::move(u));
  return pres;
}

IsoBridge::IsoBridge(const PVType& pv) : tee_(pv), pres_(build_u_xy(pv)) {}

TorusElement IsoBridge::center_image(const Poly& z) const {
  if (!is_symmetric(z) || !is_tau_invariant(z))
    throw MembershipFailure("coefficient is not central: " + z.to_string());
  const Poly a = gamma_inverse(z, tee_.pv());
  return TorusElement::part(tee_.n(), 0, Poly(tee_.vars(), a.terms()));
}

Poly IsoBridge::shifted_series(std::span<const Poly> coeffs, int m) const {
  // (0,C)(m,P)(0,B) = (m, C(X0+m) P B): Horner in b_E.
  Poly acc(tee_.vars());
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    acc *= tee_.b_E();
    if (!coeffs[j].is_zero()) acc += center_image(coeffs[j]).at(0).shift(0, Rational(m));
  }
  return acc;
}

TorusElement IsoBridge::center_series(std::span<const Poly> coeffs) const {
  return TorusElement::part(tee_.n(), 0, shifted_series(coeffs, 0));
}

TorusElement IsoBridge::phi(const UElement& el) const {
  if (!el.context()->same_as(*pres_.context))
    throw ContextMismatch("element does not belong to U(Z, u_XY, n)");
  TorusElement out(tee_.n());
  const CoeffRing& ring = pres_.context->ring();
  for (const auto& [w, p] : el.terms()) {
    const TorusElement z = w >= 0 ? tee_.x_power(w) : tee_.y_power(-w);
    std::vector<Poly> cs;
    for (int k = 0; k <= p.degree_in(ring.t_index()); ++k) cs.push_back(ring.t_coeff(p, k));
    out.add_part(w, shifted_series(cs, w) * z.at(w));
  }
  return out;
}

std::vector<Poly> IsoBridge::expand_over_center(const TorusElement& h) const {
  return decompose_tau(gamma(bfunction(h), tee_.pv()));
}

UElement IsoBridge::random_element(Rng& rng, int max_weight, int max_e_degree, int terms) const {
  const CoeffRing& ring = pres_.context->ring();
  UElement out(pres_.context);
  for (int i = 0; i < terms; ++i) {
    Poly p(ring.with_t());
    const int deg = rng.uniform_int(0, max_e_degree);
    for (int k = 0; k <= deg; ++k)
      p += ring.lift(random_central(rng, tee_.n(), 2)) * ring.t().pow(k);
    out.add(rng.uniform_int(-max_weight, max_weight), p);
  }
  return out;
}

namespace {

/// Coefficient vectors of torus elements over a common (degree, exponent) basis.
Matrix coefficient_matrix(const std::vector<TorusElement>& els) {
  std::map<std::pair<int, Exponents>, std::size_t> cols;
  for (const auto& u : els)
    for (const auto& [m, p] : u.parts())
      for (const auto& [e, c] : p.terms()) cols.try_emplace({m, e}, cols.size());
  Matrix mat(els.size(), std::vector<Rational>(cols.size()));
  for (std::size_t r = 0; r < els.size(); ++r)
    for (const auto& [m, p] : els[r].parts())
      for (const auto& [e, c] : p.terms()) mat[r][cols.at({m, e})] = c;
  return mat;
}

}  // namespace

SuiteReport verify_iso(const PVType& pv, int trials, std::uint64_t seed, int probe_degree) {
  if (trials < 1) throw OutOfRange("verify_iso needs trials >= 1");
  SuiteReport rep{"iso", pv.name(), seed, trials, {}};
  const IsoBridge bridge(pv);
  const TeeContext& tee = bridge.tee();
  const UContextPtr& uc = bridge.u_context();
  const CoeffRing& ring = uc->ring();
  const std::size_t t = ring.t_index();
  const int n = pv.n;
  const Poly sig = sigma0(n);
  Rng rng(seed);

  auto check = [&rep](const std::string& name, bool ok, const std::string& detail = {}) {
    rep.add(name, ok, ok ? std::string{} : detail);
    return ok;
  };
  auto at_sigma = [&](const Poly& p) {
    std::vector<Poly> images;
    for (int i = 0; i <= n; ++i) images.push_back(Poly::variable(r_vars(n), static_cast<std::size_t>(i)));
    images.push_back(sig);
    return p.substitute(images);
  };

  // u_XY presentation
  const Poly gxy = gamma(bfunction(tee.X() * tee.Y()), pv);
  Poly expected = Poly::constant(r_vars(n), 1);
  for (int i = 0; i <= n; ++i)
    expected *= Poly::variable(r_vars(n), static_cast<std::size_t>(i)) +
                Poly::constant(r_vars(n), pv.d * Rational(n, 4));
  if (!check("gamma(XY) = prod(r_i + dn/4)", gxy == expected, gxy.to_string())) return rep;
  if (!check("u_XY(sigma0) = gamma(XY)", at_sigma(bridge.presentation().u()) == gxy,
             bridge.presentation().u().to_string()))
    return rep;
  bool central = true;
  for (const Poly& b : bridge.presentation().beta) central = central && is_symmetric(b) && is_tau_invariant(b);
  if (!check("u_XY coefficients are central", central)) return rep;
  const Poly gyx = gamma(bfunction(tee.Y() * tee.X()), pv);
  if (!check("u_XY(t+n+1) - u_XY(t) = gamma(YX) - gamma(XY)",
             at_sigma(difference(bridge.presentation().u(), t, n)) == gyx - gxy))
    return rep;

  // relations
  const UElement x = UElement::x(uc), y = UElement::y(uc), e = UElement::e(uc);
  if (!check("phi(x) = X", bridge.phi(x) == tee.X())) return rep;
  if (!check("phi(y) = Y", bridge.phi(y) == tee.Y())) return rep;
  if (!check("phi(e) = E", bridge.phi(e) == tee.E())) return rep;
  if (!check("[E,X] = (n+1)X", commutator(tee.E(), tee.X()) == tee.X() * Rational(n + 1))) return rep;
  if (!check("[E,Y] = -(n+1)Y", commutator(tee.E(), tee.Y()) == tee.Y() * Rational(-(n + 1)))) return rep;
  const UElement u_e = UElement::term(uc, 0, uc->u());
  const UElement u_e1 = UElement::term(uc, 0, uc->u().shift(t, Rational(n + 1)));
  if (!check("XY = u_XY(E)", tee.X() * tee.Y() == bridge.phi(u_e), render(bridge.phi(u_e)))) return rep;
  if (!check("YX = u_XY(E+n+1)", tee.Y() * tee.X() == bridge.phi(u_e1), render(bridge.phi(u_e1))))
    return rep;
  const auto sc = std::make_shared<const SmithContext>(ring, n, difference(uc->u(), t, n));
  // Casimir relative to u_XY itself; it differs from the normalized one by the constant beta_0.
  const SmithElement omega_s =
      SmithElement::x(sc) * SmithElement::y(sc) - SmithElement::e_poly(sc, uc->u());
  const bool omega_central =
      smith_commutator(omega_s, SmithElement::x(sc)).is_zero() &&
      smith_commutator(omega_s, SmithElement::y(sc)).is_zero() &&
      (omega_s - casimir(sc)) == SmithElement::e_poly(sc, -ring.lift(ring.t_coeff(uc->u(), 0)));
  if (!check("xy - u_XY(e) is central in S", omega_central, omega_s.to_string())) return rep;
  const UElement omega = project_to_u(omega_s, uc);
  if (!check("Omega_1 maps to zero", omega.is_zero() && bridge.phi(x * y - u_e).is_zero(),
             omega.to_string()))
    return rep;
  if (n == 1 && !check("phi(yx - xy) = E + k/2",
                       bridge.phi(y * x - x * y) == tee.E() + tee.scalar(Rational(pv.k, 2))))
    return rep;

  // homomorphism
  for (int i = 0; i < trials; ++i) {
    const UElement a = bridge.random_element(rng, 2, 1, 2);
    const UElement b = bridge.random_element(rng, 2, 1, 2);
    const TorusElement lhs = bridge.phi(a * b), rhs = bridge.phi(a) * bridge.phi(b);
    if (!(lhs == rhs)) {
      rep.add("phi(ab) = phi(a)phi(b)", false, "a = " + a.to_string() + "; b = " + b.to_string());
      return rep;
    }
  }
  rep.add("phi(ab) = phi(a)phi(b)", true, std::to_string(trials) + " random pairs");

  // injectivity probe on canonical monomials z * Z^w e^k, |w|, k <= probe_degree
  std::vector<Poly> centrals{Poly::constant(r_vars(n), 1)};
  for (const Poly& b : bridge.presentation().beta)
    if (!b.is_constant()) {
      centrals.push_back(b);
      break;
    }
  std::vector<TorusElement> images;
  std::vector<std::string> labels;
  for (const Poly& z : centrals)
    for (int w = -probe_degree; w <= probe_degree; ++w)
      for (int k = 0; k <= probe_degree; ++k) {
        const UElement mono = UElement::term(uc, w, ring.lift(z) * ring.t().pow(k));
        images.push_back(bridge.phi(mono));
        labels.push_back(mono.to_string());
      }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].is_zero()) {
      rep.add("injectivity probe", false, "phi(" + labels[i] + ") = 0");
      return rep;
    }
    try {
      const auto d = decompose_T0XY(tee, images[i]);
      if (!(recompose_T0XY(tee, d) == images[i])) {
        rep.add("injectivity probe", false, "decomposition of phi(" + labels[i] + ") does not recompose");
        return rep;
      }
    } catch (const Error& err) {
      rep.add("injectivity probe", false, "phi(" + labels[i] + ") not in T0[X,Y]: " + err.what());
      return rep;
    }
  }
  const int rank = matrix_rank(coefficient_matrix(images));
  if (!check("injectivity probe", rank == static_cast<int>(images.size()),
             "rank " + std::to_string(rank) + " of " + std::to_string(images.size())))
    return rep;
  rep.checks.back().detail = std::to_string(images.size()) + " monomials, full rank";

  // canonical forms over the center
  for (int i = 0; i < 5; ++i) {
    const TorusElement u = random_T(tee, rng, 2, false);
    const auto d = decompose_T0XY(tee, u);
    auto over_center = [&](const TorusElement& h) {
      return bridge.center_series(bridge.expand_over_center(h));
    };
    T0XYDecomposition re;
    for (const auto& [k, h] : d.neg) re.neg.emplace_back(k, over_center(h));
    for (const auto& [k, h] : d.pos) re.pos.emplace_back(k, over_center(h));
    if (!(recompose_T0XY(tee, re) == u)) {
      rep.add("expansion over the center reassembles", false, render(u));
      return rep;
    }
  }
  rep.add("expansion over the center reassembles", true);
  return rep;
}

}  // namespace pvalg
