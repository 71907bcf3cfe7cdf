#include "derham/oracle.hpp"

#include <algorithm>

namespace derham {
namespace {

// dense univariate arithmetic, ascending coefficients
using Dense = std::vector<Rational>;

Dense dmul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Dense dadd(const Dense& a, const Dense& b) {
  Dense r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Dense dpow(const Dense& a, int e) {
  Dense r{1};
  for (int i = 0; i < e; ++i) r = dmul(r, a);
  return r;
}

Dense to_dense(const Poly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("expected univariate");
  if (p.is_zero()) return {};
  Dense r(p.degree() + 1, 0);
  for (const auto& [m, c] : p.terms()) r[m.exponents[0]] = c;
  return r;
}

// p(zeta + t) as a dense polynomial in t
Dense taylor_shift(const Dense& p, const Rational& zeta) {
  Dense acc{};
  Dense lin{zeta, 1}; // zeta + t
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = dmul(acc, lin);
    if (acc.empty()) acc = Dense{0};
    acc[0] += p[k];
  }
  return acc;
}

// coefficient of t^k in the power series N(t) / D(t); D(0) != 0
Rational series_quotient_coeff(const Dense& N, const Dense& D, int k) {
  if (D.empty() || D[0] == 0)
    throw std::invalid_argument("denominator vanishes at expansion point");
  Dense q(k + 1, 0);
  for (int i = 0; i <= k; ++i) {
    Rational acc = i < static_cast<int>(N.size()) ? N[i] : Rational(0);
    for (int j = 0; j < i; ++j)
      if (i - j < static_cast<int>(D.size())) acc -= q[j] * D[i - j];
    q[i] = acc / D[0];
  }
  return q[k];
}

} // namespace

RationalRootData make_root_data(const Poly& f, std::vector<Rational> roots,
                                const Rational& leading_coeff) {
  if (f.nvars() != 1) throw std::invalid_argument("f must be univariate");
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j])
        throw std::invalid_argument("repeated root");
  Poly rebuilt = Poly::constant(1, leading_coeff);
  Poly x = Poly::variable(1, 0);
  for (const Rational& z : roots) rebuilt = rebuilt * (x - Poly::constant(1, z));
  if (!(rebuilt == f))
    throw std::invalid_argument("root list inconsistent with f");
  return RationalRootData{f, std::move(roots), leading_coeff};
}

std::vector<Rational> univariate_residues(const Poly& g,
                                          const RationalRootData& rd, int s) {
  if (s < 1) throw std::invalid_argument("pole order must be >= 1");
  const Dense gd = to_dense(g);
  std::vector<Rational> out;
  const int d = static_cast<int>(rd.roots.size());
  for (int i = 0; i < d; ++i) {
    const Rational& zi = rd.roots[i];
    // q(t) = f(zi + t)^s / t^s = lc^s * prod_{j != i} ((zi - zj) + t)^s
    Dense q{1};
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      q = dmul(q, Dense{zi - rd.roots[j], 1});
    }
    q = dpow(q, s);
    Rational lcs = 1;
    for (int k = 0; k < s; ++k) lcs *= rd.leading_coeff;
    for (auto& c : q) c *= lcs;
    Dense num = taylor_shift(gd, zi);
    out.push_back(num.empty() ? Rational(0)
                              : series_quotient_coeff(num, q, s - 1));
  }
  return out;
}

Poly idempotent(const RationalRootData& rd, int i) {
  const int d = static_cast<int>(rd.roots.size());
  Poly num = Poly::constant(1, 1);
  Poly x = Poly::variable(1, 0);
  Rational a = 1;
  for (int j = 0; j < d; ++j) {
    if (j == i) continue;
    num = num * (x - Poly::constant(1, rd.roots[j]));
    a *= rd.roots[i] - rd.roots[j];
  }
  return num * (1 / a);
}

std::pair<Rational, Rational> curve_pullback_residues(const Hypersurface& hs,
                                                      const BForm& tau) {
  // hard-coded to f = x y^2 - x - 1
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly curve = x * y * y - x - Poly::constant(2, 1);
  if (!(hs.f == curve))
    throw std::invalid_argument("pullback oracle only supports x*y^2 - x - 1");
  if (tau.p != 1) throw std::invalid_argument("expected a 1-form");

  auto coeff_of = [&](int idx) -> Poly {
    auto it = tau.terms.find(IndexSet{idx});
    return it == tau.terms.end() ? Poly::zero(2) : it->second.rep;
  };
  Poly cx = coeff_of(0), cy = coeff_of(1);

  // substitute x -> 1/(y^2-1): c(x,y) -> num / (y^2-1)^k
  const Dense y2m1{-1, 0, 1};
  auto substitute = [&](const Poly& c) -> std::pair<Dense, int> {
    int k = 0;
    for (const auto& [m, coef] : c.terms()) k = std::max(k, m.exponents[0]);
    Dense num{};
    for (const auto& [m, coef] : c.terms()) {
      Dense t{coef};
      Dense ypow(m.exponents[1] + 1, 0);
      ypow[m.exponents[1]] = 1;
      t = dmul(t, ypow);
      t = dmul(t, dpow(y2m1, k - m.exponents[0]));
      num = dadd(num, t);
    }
    return {num, k};
  };

  auto [nx, kx] = substitute(cx);
  auto [ny, ky] = substitute(cy);
  // r(y) dy with r = nx * (-2y) / (y^2-1)^(kx+2) + ny / (y^2-1)^ky
  int m = std::max(kx + 2, ky);
  Dense num = dadd(dmul(dmul(nx, Dense{0, -2}), dpow(y2m1, m - kx - 2)),
                   dmul(ny, dpow(y2m1, m - ky)));

  // residue at zeta of num / ((y-1)(y+1))^m: shift t = y - zeta, the pole
  // factor is t^m and the analytic factor (t + 2 zeta)^m
  auto res_at = [&](const Rational& zeta) -> Rational {
    if (m == 0) return 0;
    Dense N = taylor_shift(num, zeta);
    if (N.empty()) return 0;
    Dense D = dpow(Dense{2 * zeta, 1}, m);
    return series_quotient_coeff(N, D, m - 1);
  };
  return {res_at(1), res_at(-1)};
}

} // namespace derham
