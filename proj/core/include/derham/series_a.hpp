#ifndef DERHAM_SERIES_A_HPP
#define DERHAM_SERIES_A_HPP

#include <vector>

#include "derham/hypersurface.hpp"

namespace derham {

/// Truncated f-adic expansion sum_v a_v f^v, an element of the completion
/// of A at (f) modulo f^(N+1). The coefficient representation is not
/// unique; equality is collapse equality.
struct SeriesA {
  Hypersurface hs;
  std::vector<Poly> coeffs; // a_0 .. a_N

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const Poly& coeff(int v) const { return coeffs.at(v); }
};

SeriesA series_from_poly(const Hypersurface& hs, const Poly& a, int N);
SeriesA series_zero(const Hypersurface& hs, int N);

SeriesA series_add(const SeriesA& a, const SeriesA& b);
SeriesA series_sub(const SeriesA& a, const SeriesA& b);
/// Truncated convolution; both operands and the result share one order.
SeriesA series_mul(const SeriesA& a, const SeriesA& b);
SeriesA series_scale(const SeriesA& a, const Rational& c);
SeriesA series_truncate(const SeriesA& a, int N);

/// The polynomial NF(sum a_v f^v) mod f^(N+1) -- the canonical
/// representative behind the non-unique coefficient form.
Poly series_collapse(const SeriesA& a);

bool series_equal(const SeriesA& a, const SeriesA& b);

} // namespace derham

#endif
