#include "derham/residue.hpp"

#include "derham/bounds.hpp"

namespace derham {
namespace {

// Truncated series in T with BForm coefficients, index = T-power.
using BFormSeries = std::vector<BForm>;

BFormSeries zero_series(int nvars, int p, int len) {
  return BFormSeries(len, bform_zero(nvars, p));
}

void add_into(const Hypersurface& hs, BFormSeries& acc, const BFormSeries& s) {
  (void)hs;
  for (std::size_t v = 0; v < acc.size() && v < s.size(); ++v)
    acc[v] = bform_add(acc[v], s[v]);
}

BFormSeries wedge_series(const Hypersurface& hs, const BFormSeries& a,
                         const BFormSeries& b, int len) {
  int p = (a.empty() ? 0 : a[0].p) + (b.empty() ? 0 : b[0].p);
  BFormSeries r = zero_series(hs.n, p, len);
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) < len; ++j)
      r[i + j] = bform_add(r[i + j], wedge(hs, a[i], b[j]));
  }
  return r;
}

BFormSeries scale_series(const Hypersurface& hs, const BFormSeries& a,
                         const SeriesB& s, int len) {
  int p = a.empty() ? 0 : a[0].p;
  BFormSeries r = zero_series(hs.n, p, len);
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < s.coeffs.size() && static_cast<int>(i + j) < len;
         ++j)
      r[i + j] = bform_add(r[i + j], bform_scale(hs, a[i], s.coeffs[j]));
  }
  return r;
}

BFormSeries negate_series(const BFormSeries& a) {
  BFormSeries r = a;
  for (auto& w : r)
    for (auto& [J, c] : w.terms) c = QElem{-c.rep};
  return r;
}

} // namespace

XiDifferential xi_differential(const PsiData& psi, int i, int N) {
  if (i < 0 || i >= psi.hs.n) throw std::out_of_range("variable index");
  if (N + 1 > psi.order)
    throw std::invalid_argument("psi order too small for xi_differential");
  SeriesB Xi = psi_hat_inv(psi, Poly::variable(psi.hs.n, i), N + 1);
  XiDifferential out;
  out.dT_part.pole_order = 0;
  for (int v = 0; v <= N; ++v) {
    out.dT_part.coeffs.push_back(qscale(Xi.coeffs[v + 1], v + 1));
    out.spatial.push_back(d_B(psi.hs, Xi.coeffs[v]));
  }
  return out;
}

ResidueResult residue(const Hypersurface& hs, const PsiData& psi,
                      const LocForm& omega, bool assert_bounds) {
  const int p = omega.numerator.p;
  const int s = omega.pole_order;
  if (p < 1) throw std::invalid_argument("residue needs a p-form with p >= 1");
  if (s == 0)
    return ResidueResult{bform_zero(hs.n, p - 1), /*had_pole=*/false};
  if (s > psi.order)
    throw std::invalid_argument("psi order too small for pole order");

  const int len = s; // T-powers 0..s-1; T^(s-1) pairs with T^-s to give dT/T
  BForm total = bform_zero(hs.n, p - 1);

  // per-variable differentials of Xi, cached across the terms of omega
  std::vector<XiDifferential> xd;
  std::vector<bool> have(hs.n, false);
  xd.resize(hs.n);

  auto get_xd = [&](int i) -> const XiDifferential& {
    if (!have[i]) {
      xd[i] = xi_differential(psi, i, s - 1);
      have[i] = true;
    }
    return xd[i];
  };

  for (const auto& [J, alpha] : omega.numerator.terms) {
    SeriesB bJ = psi_hat_inv(psi, alpha, s, assert_bounds);
    // sum over which factor of dXi_{j1} ^ ... ^ dXi_{jp} contributes dT
    BFormSeries dT_coeff = zero_series(hs.n, p - 1, len);
    for (int k = 0; k < p; ++k) {
      const XiDifferential& xk = get_xd(J[k]);
      // spatial wedge of the other factors, in order
      BFormSeries w = zero_series(hs.n, 0, len);
      w[0] = BForm{hs.n, 0, {{IndexSet{}, QElem{Poly::constant(hs.n, 1)}}}};
      for (int l = 0; l < p; ++l) {
        if (l == k) continue;
        w = wedge_series(hs, w, get_xd(J[l]).spatial, len);
      }
      BFormSeries contrib = scale_series(hs, w, xk.dT_part, len);
      if (k % 2 == 1) contrib = negate_series(contrib);
      add_into(hs, dT_coeff, contrib);
    }
    BFormSeries with_b = scale_series(hs, dT_coeff, bJ, len);
    total = bform_add(total, with_b[s - 1]);
  }

  if (assert_bounds && hs.d >= 3) {
    int actual = deg_bform(total);
    if (actual != kDegNegInf &&
        Integer(actual) >
            gysin_degree_bound(hs.d, hs.n, s, deg_locform(hs, omega)))
      throw BoundViolation("residue degree bound violated");
  }
  return ResidueResult{total, true};
}

} // namespace derham
