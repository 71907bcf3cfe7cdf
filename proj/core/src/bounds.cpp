#include "derham/bounds.hpp"

#include <stdexcept>

namespace derham {
namespace {

Integer ipow(Integer base, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Integer two_dn_plus_d(int d, int n) {
  return 2 * ipow(d, n) + d;
}

} // namespace

Integer gysin_degree_bound(int d, int n, int s, int deg_omega) {
  if (d < 3) throw std::domain_error("gysin_degree_bound requires d >= 3");
  if (s < 1) throw std::domain_error("gysin_degree_bound requires s >= 1");
  return ipow(two_dn_plus_d(d, n), s) * (deg_omega + s * d);
}

Integer derham_degree_bound(int d, int n, int p) {
  if (d < 3) throw std::domain_error("derham_degree_bound requires d >= 3");
  if (p < 0) throw std::domain_error("derham_degree_bound requires p >= 0");
  return Integer(p + 1) * (d + 1) * ipow(two_dn_plus_d(d, n), p + 1);
}

} // namespace derham
