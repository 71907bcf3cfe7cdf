#ifndef DERHAM_HYPERSURFACE_HPP
#define DERHAM_HYPERSURFACE_HPP

#include "derham/poly.hpp"

namespace derham {

/// A hypersurface Z(f) given by a reduced (squarefree) equation f.
/// Squarefreeness is the caller's responsibility; a successful smoothness
/// certificate then witnesses that Z(f) is smooth.
struct Hypersurface {
  Poly f;
  int n = 0; // ambient variable count
  int d = 0; // total degree of f
};

inline Hypersurface make_hypersurface(const Poly& f) {
  if (f.is_zero() || f.degree() < 1)
    throw std::invalid_argument("hypersurface equation must be nonconstant");
  return Hypersurface{f, f.nvars(), f.degree()};
}

} // namespace derham

#endif
