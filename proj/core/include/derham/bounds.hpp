#ifndef DERHAM_BOUNDS_HPP
#define DERHAM_BOUNDS_HPP

#include "derham/rational.hpp"

namespace derham {

/// (2d^n + d)^s (deg_omega + s d); requires d >= 3, s >= 1.
Integer gysin_degree_bound(int d, int n, int s, int deg_omega);

/// (p+1)(d+1)(2d^n + d)^(p+1); requires d >= 3, p >= 0.
Integer derham_degree_bound(int d, int n, int p);

} // namespace derham

#endif
