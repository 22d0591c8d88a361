#include "pvalg/sym_harish.hpp"

#include <algorithm>
#include <numeric>

#include "pvalg/errors.hpp"
#include "pvalg/linalg.hpp"

namespace pvalg {

VarsPtr r_vars(int n) {
  if (n < 0) throw OutOfRange("rank parameter must be non-negative");
  return indexed_vars("r", static_cast<std::size_t>(n) + 1);
}

std::vector<Rational> rho_vector(int n, const Rational& d) {
  std::vector<Rational> rho;
  for (int i = 0; i <= n; ++i) rho.push_back(d / Rational(4) * Rational(2 * i - n));
  return rho;
}

namespace {

int rank_of(const Poly& p) { return static_cast<int>(p.vars()->size()) - 1; }

Poly shift_all(const Poly& p, std::span<const Rational> by) {
  Poly q = p;
  for (std::size_t i = 0; i < by.size(); ++i) q = q.shift(i, by[i]);
  return q;
}

// p(r + step * (1,...,1)) = sum_k step^k / k! * D^k p, D = sum of all partials.
Poly along_diagonal(const Poly& p, const Poly& step) {
  std::vector<Poly> derivs{p};
  while (!derivs.back().is_zero()) {
    const Poly& last = derivs.back();
    Poly next(last.vars());
    for (std::size_t i = 0; i < last.vars()->size(); ++i) next += last.derivative(i);
    derivs.push_back(std::move(next));
  }
  Poly out(p.vars());
  Rational factorial(1);
  for (std::size_t k = 1; k + 1 < derivs.size(); ++k) factorial *= Rational(static_cast<long>(k));
  for (std::size_t k = derivs.size() - 1; k-- > 0;) {
    out = out * step + derivs[k] * (Rational(1) / factorial);
    if (k > 0) factorial /= Rational(static_cast<long>(k));
  }
  return out;
}

}  // namespace

Poly a_to_r(const Poly& p) {
  const int n = rank_of(p);
  // a0 = r0, ai = ri - r(i-1)
  Poly q(r_vars(n), p.terms());
  for (int i = 1; i <= n; ++i)
    q = q.shear(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1), Rational(-1));
  return q;
}

Poly r_to_a(const Poly& p) {
  const int n = rank_of(p);
  // ri = a0 + ... + ai
  Poly q(a_vars(n), p.terms());
  for (int i = n; i >= 1; --i)
    q = q.shear(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1), Rational(1));
  return q;
}

SymPoly::SymPoly(Poly p)
    : poly_(std::move(p)),
      symmetric_(pvalg::is_symmetric(poly_)),
      tau_invariant_(pvalg::is_tau_invariant(poly_)) {}

Poly gamma_raw(const Poly& a_poly, const PVType& pv) {
  if (rank_of(a_poly) != pv.n) throw ContextMismatch("b-function rank differs from the PV type");
  std::vector<Rational> minus_rho = rho_vector(pv.n, pv.d);
  for (auto& x : minus_rho) x = -x;
  return shift_all(a_to_r(a_poly), minus_rho);
}

Poly gamma(const BFunction& b, const PVType& pv) {
  if (b.p != 0) throw NotSymmetric("Harish-Chandra image needs a degree-0 element");
  Poly g = gamma_raw(b.poly, pv);
  if (!is_symmetric(g)) throw NotSymmetric("image is not symmetric: " + g.to_string());
  return g;
}

Poly gamma_inverse(const Poly& r_poly, const PVType& pv) {
  if (rank_of(r_poly) != pv.n) throw ContextMismatch("r-polynomial rank differs from the PV type");
  return r_to_a(shift_all(r_poly, rho_vector(pv.n, pv.d)));
}

bool is_symmetric(const Poly& r_poly) {
  const std::size_t vars = r_poly.vars()->size();
  std::vector<std::size_t> perm(vars);
  for (std::size_t i = 0; i + 1 < vars; ++i) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::swap(perm[i], perm[i + 1]);
    if (!(r_poly.permute(perm) == r_poly)) return false;
  }
  return true;
}

Poly tau_shift(const Poly& r_poly, int times) {
  std::vector<Rational> by(r_poly.vars()->size(), Rational(times));
  return shift_all(r_poly, by);
}

bool is_tau_invariant(const Poly& r_poly) { return tau_shift(r_poly) == r_poly; }

Poly sigma0(int n) {
  const VarsPtr rv = r_vars(n);
  Poly s(rv);
  for (int i = 0; i <= n; ++i) s += Poly::variable(rv, static_cast<std::size_t>(i));
  return s;
}

std::vector<Poly> decompose_tau(const Poly& s) {
  if (!is_symmetric(s)) throw NotSymmetric("decompose_tau needs a symmetric input");
  const int n = rank_of(s);
  const VarsPtr& v = s.vars();
  const Poly sig = Poly(v, sigma0(n).terms());
  const Poly step = sig * Rational(-1, n + 1);
  std::vector<Poly> alphas;
  Poly cur = s;
  do {
    Poly alpha = along_diagonal(cur, step);
    auto q = divide_exact(cur - alpha, sig);
    if (!q) throw std::logic_error("decompose_tau: remainder not divisible by sigma0");
    alphas.push_back(std::move(alpha));
    cur = std::move(*q);
  } while (!cur.is_zero());
  return alphas;
}

std::vector<std::pair<Poly, int>> tau_invariant_generators(std::span<const Poly> gens) {
  std::vector<std::pair<Poly, int>> out;
  for (const Poly& g : gens) {
    const auto alphas = decompose_tau(g);
    for (std::size_t i = 0; i < alphas.size(); ++i)
      if (!alphas[i].is_zero()) out.emplace_back(alphas[i], static_cast<int>(i));
  }
  return out;
}

CenterSplit center_split(const BFunction& b, const PVType& pv) {
  const Poly g = gamma(b, pv);
  Poly z = decompose_tau(g).front();
  Poly rest = g - z;
  return {std::move(z), std::move(rest)};
}

Poly symmetrize(const Poly& r_poly) {
  std::vector<std::size_t> perm(r_poly.vars()->size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Poly sum(r_poly.vars());
  do sum += r_poly.permute(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

Poly random_central(Rng& rng, int n, int max_degree) {
  const VarsPtr rv = r_vars(n);
  const Poly s = symmetrize(rng.poly(rv, 3, max_degree));
  return decompose_tau(s).front() + Poly::constant(rv, rng.rational());
}

Rational jacobian_determinant(std::span<const Poly> fs, std::span<const Rational> point) {
  Matrix j;
  for (const Poly& f : fs) {
    std::vector<Rational> row;
    for (std::size_t v = 0; v < point.size(); ++v) row.push_back(f.derivative(v).evaluate(point));
    j.push_back(std::move(row));
  }
  return determinant(std::move(j));
}

}  // namespace pvalg
