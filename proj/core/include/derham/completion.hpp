#ifndef DERHAM_COMPLETION_HPP
#define DERHAM_COMPLETION_HPP

#include "derham/lift.hpp"
#include "derham/qelem.hpp"

namespace derham {

/// Truncated element of B[[T]] (pole_order 0) or T^-s B[[T]]; semantics
/// sum_v coeffs[v] T^(v - pole_order). Coefficients are canonical NFs, so
/// equality is coefficient-wise.
struct SeriesB {
  int pole_order = 0;
  std::vector<QElem> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const SeriesB& o) const {
    return pole_order == o.pole_order && coeffs == o.coeffs;
  }
};

struct SplitResult {
  QElem b;
  SeriesA c; // order one less than the input
};

/// The splitting A^ = B (+) (f): a = psi(b) + c f with unique b. The input
/// must have order >= 1; c comes back with one order less.
SplitResult split(const PsiData& psi, const SeriesA& a);

/// psi_hat: B[[T]] -> A^, sum b_v T^v -> sum psi(b_v) f^v, truncated.
SeriesA psi_hat(const PsiData& psi, const SeriesB& s);

/// Inverse of psi_hat on a polynomial input, by iterated splitting:
/// returns sum_{mu<=N} b_mu T^mu with psi_hat(result) == a mod f^(N+1).
/// Requires psi.order >= N. When d >= 3 the coefficient degree bound
/// deg b_mu <= (2d^n + d)^mu * deg a is asserted.
SeriesB psi_hat_inv(const PsiData& psi, const Poly& a, int N,
                    bool assert_bounds = true);

/// Same construction on a series input; no polynomial degree bound applies.
SeriesB psi_hat_inv_series(const PsiData& psi, const SeriesA& a);

} // namespace derham

#endif
