#include "derham/lift.hpp"

namespace derham {

SeriesA series_from_poly(const Hypersurface& hs, const Poly& a, int N) {
  if (N < 0) throw std::invalid_argument("order must be >= 0");
  SeriesA s{hs, std::vector<Poly>(N + 1, Poly::zero(hs.n))};
  s.coeffs[0] = a;
  return s;
}

SeriesA series_zero(const Hypersurface& hs, int N) {
  return series_from_poly(hs, Poly::zero(hs.n), N);
}

static void check_compatible(const SeriesA& a, const SeriesA& b) {
  if (a.hs.f != b.hs.f || a.order() != b.order())
    throw std::invalid_argument("series mismatch");
}

SeriesA series_add(const SeriesA& a, const SeriesA& b) {
  check_compatible(a, b);
  SeriesA r = a;
  for (int v = 0; v <= a.order(); ++v) r.coeffs[v] += b.coeffs[v];
  return r;
}

SeriesA series_sub(const SeriesA& a, const SeriesA& b) {
  check_compatible(a, b);
  SeriesA r = a;
  for (int v = 0; v <= a.order(); ++v) r.coeffs[v] -= b.coeffs[v];
  return r;
}

SeriesA series_mul(const SeriesA& a, const SeriesA& b) {
  check_compatible(a, b);
  SeriesA r = series_zero(a.hs, a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order(); ++j) {
      if (b.coeffs[j].is_zero()) continue;
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return r;
}

SeriesA series_scale(const SeriesA& a, const Rational& c) {
  SeriesA r = a;
  for (auto& p : r.coeffs) p = p * c;
  return r;
}

SeriesA series_truncate(const SeriesA& a, int N) {
  if (N > a.order()) throw std::invalid_argument("cannot extend a series");
  SeriesA r{a.hs, {a.coeffs.begin(), a.coeffs.begin() + N + 1}};
  return r;
}

Poly series_collapse(const SeriesA& a) {
  Poly acc = Poly::zero(a.hs.n);
  Poly fpow = Poly::constant(a.hs.n, 1);
  for (int v = 0; v <= a.order(); ++v) {
    acc += a.coeffs[v] * fpow;
    fpow = fpow * a.hs.f;
  }
  return divmod_by_power(acc, a.hs.f, a.order() + 1).remainder;
}

bool series_equal(const SeriesA& a, const SeriesA& b) {
  check_compatible(a, b);
  return series_collapse(a) == series_collapse(b);
}

std::vector<Poly> lift_step(const Hypersurface& hs, const Certificate& cert,
                            const std::vector<Poly>& Y, int nu) {
  if (nu < 1) throw std::invalid_argument("nu must be positive");
  if (static_cast<int>(Y.size()) != hs.n)
    throw std::invalid_argument("lift arity mismatch");
  Poly fY = hs.f.substitute(Y);
  auto [p, rem] = divmod_by_power(fY, hs.f, nu);
  if (!rem.is_zero())
    throw NotALiftError("f(Y) is not divisible by f^nu");
  Poly fnu = hs.f.pow(nu);
  std::vector<Poly> next;
  next.reserve(hs.n);
  for (int i = 0; i < hs.n; ++i) {
    Poly a_i = normal_form(-(p * cert.g[i]), hs.f);
    next.push_back(Y[i] + a_i * fnu);
  }
  return next;
}

PsiData build_psi(const Hypersurface& hs, const Certificate& cert, int N,
                  bool assert_bounds) {
  if (N < 0) throw std::invalid_argument("order must be >= 0");
  PsiData psi{hs, cert, N, {}};
  std::vector<std::vector<Poly>> coeffs(hs.n);
  std::vector<Poly> Y;
  for (int i = 0; i < hs.n; ++i) {
    Y.push_back(Poly::variable(hs.n, i));
    coeffs[i].push_back(Y[i]);
  }
  for (int nu = 1; nu <= N; ++nu) {
    std::vector<Poly> next = lift_step(hs, cert, Y, nu);
    for (int i = 0; i < hs.n; ++i) {
      auto [a, rem] = divmod_by_power(next[i] - Y[i], hs.f, nu);
      if (!rem.is_zero())
        throw std::logic_error("lift correction not divisible by f^nu");
      coeffs[i].push_back(a);
    }
    Y = std::move(next);
  }

  // Nullstellensatz coefficient bound: only meaningful when the
  // certificate respects deg g_i <= d^n.
  if (assert_bounds) {
    Integer dn = 1;
    for (int i = 0; i < hs.n; ++i) dn *= hs.d;
    if (Integer(cert.degree_bound_used) <= dn) {
      Integer gamma = 2 * dn / hs.d + 1; // 2 d^(n-1) + 1
      Integer dpow = 1;
      for (int nu = 0; nu <= N; ++nu) {
        for (int i = 0; i < hs.n; ++i) {
          int deg = coeffs[i][nu].degree();
          if (deg != kDegNegInf && Integer(deg) > dpow * gamma)
            throw BoundViolation("lift coefficient degree bound violated");
        }
        dpow *= hs.d;
      }
    }
  }

  for (int i = 0; i < hs.n; ++i)
    psi.xi.push_back(SeriesA{hs, std::move(coeffs[i])});
  return psi;
}

SeriesA psi_apply(const PsiData& psi, const Poly& b, int order) {
  const int N = order < 0 ? psi.order : order;
  if (N > psi.order) throw std::invalid_argument("order exceeds psi order");
  const Hypersurface& hs = psi.hs;
  std::vector<std::vector<SeriesA>> powers(hs.n);
  for (int i = 0; i < hs.n; ++i)
    powers[i].push_back(series_from_poly(hs, Poly::constant(hs.n, 1), N));
  SeriesA acc = series_zero(hs, N);
  for (const auto& [m, c] : b.terms()) {
    SeriesA v = series_from_poly(hs, Poly::constant(hs.n, c), N);
    for (int i = 0; i < hs.n; ++i) {
      int e = m.exponents[i];
      while (static_cast<int>(powers[i].size()) <= e)
        powers[i].push_back(
            series_mul(powers[i].back(), series_truncate(psi.xi[i], N)));
      if (e > 0) v = series_mul(v, powers[i][e]);
    }
    acc = series_add(acc, v);
  }
  return acc;
}

} // namespace derham
