#ifndef DERHAM_CERTIFICATE_HPP
#define DERHAM_CERTIFICATE_HPP

#include <optional>
#include <vector>

#include "derham/poly.hpp"

namespace derham {

/// Effective Nullstellensatz witness for smoothness of Z(f):
///   sum_i g_i * d_i f + h * f = 1  (exact polynomial identity).
struct Certificate {
  std::vector<Poly> g;
  Poly h;
  int degree_bound_used = 0;
};

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Searches D = 0..D_max for the smallest degree bound admitting a
/// certificate with deg g_i <= D. The solution is pinned by a fixed
/// unknown order and elimination pivot order with free variables set to
/// zero, so identical inputs give identical certificates.
std::optional<Certificate> find_certificate(const Poly& f, int D_max);

/// find_certificate with the Nullstellensatz bound D_max = d^n. For a
/// squarefree f, NotFound (nullopt) at this bound means Z(f) is singular.
/// Refuses with CapacityError when d^n exceeds cap.
std::optional<Certificate> certify_smooth(const Poly& f,
                                          long cap = 1000000);

/// Exact re-check of the defining identity.
bool certificate_valid(const Poly& f, const Certificate& cert);

} // namespace derham

#endif
