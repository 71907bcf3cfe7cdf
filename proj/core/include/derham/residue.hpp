#ifndef DERHAM_RESIDUE_HPP
#define DERHAM_RESIDUE_HPP

#include "derham/completion.hpp"
#include "derham/forms.hpp"

namespace derham {

/// d Xi_i = sum_v ((v+1) b_{i,v+1} dT + d_B b_{i,v}) T^v, where
/// Xi_i = psi_hat_inv(X_i, N+1). dT_part.coeffs[v] = (v+1) b_{i,v+1};
/// spatial[v] = d_B b_{i,v}. Requires psi.order >= N+1.
struct XiDifferential {
  SeriesB dT_part;
  std::vector<BForm> spatial;
};

XiDifferential xi_differential(const PsiData& psi, int i, int N);

struct ResidueResult {
  BForm value;
  bool had_pole = true; // false: pole_order 0 input, nothing to extract
};

/// The residue map of the Gysin sequence on the level of forms: rewrite
/// omega = alpha/f^s dX_J in the variable T = f via psi_hat_inv and
/// extract the total coefficient of dT/T. Requires pole_order <= psi.order
/// and p >= 1. When d >= 3 the degree bound
/// deg(result) <= (2d^n + d)^s (deg omega + s d) is asserted.
ResidueResult residue(const Hypersurface& hs, const PsiData& psi,
                      const LocForm& omega, bool assert_bounds = true);

} // namespace derham

#endif
