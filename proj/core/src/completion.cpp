#include "derham/completion.hpp"

namespace derham {

SplitResult split(const PsiData& psi, const SeriesA& a) {
  const int N = a.order();
  if (N < 1) throw std::invalid_argument("split needs order >= 1");
  if (N > psi.order) throw std::invalid_argument("order exceeds psi order");
  const Hypersurface& hs = psi.hs;

  QElem b = make_qelem(hs, a.coeffs[0]);
  SeriesA u = series_sub(a, psi_apply(psi, b.rep, N));
  auto [q, rem] = divmod_by_power(u.coeffs[0], hs.f, 1);
  if (!rem.is_zero())
    throw std::logic_error("split: zeroth coefficient not divisible by f");

  SeriesA c = series_zero(hs, N - 1);
  c.coeffs[0] = q + u.coeffs[1];
  for (int v = 1; v < N; ++v) c.coeffs[v] = u.coeffs[v + 1];
  return {b, c};
}

SeriesA psi_hat(const PsiData& psi, const SeriesB& s) {
  if (s.pole_order != 0)
    throw std::invalid_argument("psi_hat needs pole_order 0");
  const int N = s.order();
  if (N > psi.order) throw std::invalid_argument("order exceeds psi order");
  SeriesA r = series_zero(psi.hs, N);
  for (int v = 0; v <= N; ++v) {
    if (s.coeffs[v].is_zero()) continue;
    SeriesA t = psi_apply(psi, s.coeffs[v].rep, N - v);
    for (int k = 0; k <= N - v; ++k) r.coeffs[v + k] += t.coeffs[k];
  }
  return r;
}

SeriesB psi_hat_inv_series(const PsiData& psi, const SeriesA& a) {
  const int N = a.order();
  if (N > psi.order) throw std::invalid_argument("order exceeds psi order");
  SeriesB out;
  out.pole_order = 0;
  SeriesA cur = a;
  for (int mu = 0; mu < N; ++mu) {
    SplitResult sr = split(psi, cur);
    out.coeffs.push_back(sr.b);
    cur = sr.c;
  }
  out.coeffs.push_back(make_qelem(psi.hs, cur.coeffs[0]));
  return out;
}

SeriesB psi_hat_inv(const PsiData& psi, const Poly& a, int N,
                    bool assert_bounds) {
  SeriesB out = psi_hat_inv_series(psi, series_from_poly(psi.hs, a, N));
  const Hypersurface& hs = psi.hs;
  if (assert_bounds && hs.d >= 3 && !a.is_zero()) {
    Integer base = 2;
    for (int i = 0; i < hs.n; ++i) base *= hs.d;
    base += hs.d; // 2 d^n + d
    Integer bound = a.degree();
    for (int mu = 0; mu <= N; ++mu) {
      int deg = out.coeffs[mu].degree();
      if (deg != kDegNegInf && Integer(deg) > bound)
        throw BoundViolation("psi_hat_inv coefficient degree bound violated");
      bound *= base;
    }
  }
  return out;
}

} // namespace derham
