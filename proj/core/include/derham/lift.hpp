#ifndef DERHAM_LIFT_HPP
#define DERHAM_LIFT_HPP

#include "derham/certificate.hpp"
#include "derham/errors.hpp"
#include "derham/series_a.hpp"

namespace derham {

/// The formally smooth lift psi: B -> completion of A, as the per-variable
/// series xi_i = psi(X_i) with xi_i.coeffs[0] == X_i.
struct PsiData {
  Hypersurface hs;
  Certificate cert;
  int order = 0; // truncation order N; series hold coefficients a_{i,0..N}
  std::vector<SeriesA> xi;
};

/// Newton-style correction: given Y with f(Y) == 0 mod f^nu and
/// Y_i == X_i mod f, returns Y' with f(Y') == 0 mod f^(nu+1), where
/// Y'_i = Y_i + a_i f^nu and a_i = NF(-p g_i) with f(Y) = p f^nu.
std::vector<Poly> lift_step(const Hypersurface& hs, const Certificate& cert,
                            const std::vector<Poly>& Y, int nu);

PsiData build_psi(const Hypersurface& hs, const Certificate& cert, int N,
                  bool assert_bounds = true);

/// psi(b) for the class of b in B: substitute xi_i for X_i with truncated
/// series arithmetic. order defaults to psi.order and must not exceed it.
SeriesA psi_apply(const PsiData& psi, const Poly& b, int order = -1);

} // namespace derham

#endif
