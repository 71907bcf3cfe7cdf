#ifndef DERHAM_ORACLE_HPP
#define DERHAM_ORACLE_HPP

#include <utility>
#include <vector>

#include "derham/forms.hpp"
#include "derham/qelem.hpp"

namespace derham {

/// A univariate f = lc * prod (X - zeta_i) with distinct rational roots.
struct RationalRootData {
  Poly f; // nvars == 1
  std::vector<Rational> roots;
  Rational leading_coeff;
};

/// Validates f == lc * prod(X - zeta_i) with pairwise distinct roots.
RationalRootData make_root_data(const Poly& f, std::vector<Rational> roots,
                                const Rational& leading_coeff);

/// Classical residues Res_{zeta_i}(g / f^s), exact, via Taylor expansion
/// of g / (f^s / (X - zeta_i)^s) around each root.
std::vector<Rational> univariate_residues(const Poly& g,
                                          const RationalRootData& roots,
                                          int s);

/// Idempotent e_i = prod_{j != i}(X - zeta_j) / prod_{j != i}(zeta_i - zeta_j),
/// the characteristic function of the point zeta_i in B.
Poly idempotent(const RationalRootData& roots, int i);

/// Pullback along (x, y) -> y, an isomorphism of Z(xy^2 - x - 1) onto
/// C \ {+-1}: substitute x = 1/(y^2-1), dX = -2y/(y^2-1)^2 dY into a
/// representative of tau and return the exact residues of the resulting
/// 1-form at y = 1 and y = -1.
std::pair<Rational, Rational> curve_pullback_residues(const Hypersurface& hs,
                                                      const BForm& tau);

} // namespace derham

#endif
