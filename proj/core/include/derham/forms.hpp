#ifndef DERHAM_FORMS_HPP
#define DERHAM_FORMS_HPP

#include <map>
#include <vector>

#include "derham/certificate.hpp"
#include "derham/qelem.hpp"

namespace derham {

/// Strictly increasing 0-based variable indices of dX_{j1} ^ ... ^ dX_{jp}.
using IndexSet = std::vector<int>;

/// Exterior p-form with polynomial coefficients, sum_J c_J dX_J.
struct AForm {
  int nvars = 0;
  int p = 0;
  std::map<IndexSet, Poly> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const AForm& o) const {
    return nvars == o.nvars && p == o.p && terms == o.terms;
  }
};

/// p-form with coefficients in B, as NF representatives. Representative
/// equality is coefficient equality; equality of classes in Omega^p_B is
/// decided by bform_class_eq.
struct BForm {
  int nvars = 0;
  int p = 0;
  std::map<IndexSet, QElem> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const BForm& o) const {
    return nvars == o.nvars && p == o.p && terms == o.terms;
  }
};

/// numerator / f^pole_order, a form over the localization A_f.
struct LocForm {
  AForm numerator;
  int pole_order = 0;
};

AForm aform_zero(int nvars, int p);
void aform_add_term(AForm& w, IndexSet J, const Poly& c);
AForm aform_add(const AForm& a, const AForm& b);
AForm aform_sub(const AForm& a, const AForm& b);
AForm aform_scale(const AForm& a, const Poly& c);

BForm bform_zero(int nvars, int p);
void bform_add_term(BForm& w, IndexSet J, const QElem& c);
BForm bform_add(const BForm& a, const BForm& b);
BForm bform_sub(const BForm& a, const BForm& b);
BForm bform_scale(const Hypersurface& hs, const BForm& a, const QElem& c);

/// Graded-commutative exterior product; repeated indices vanish.
AForm wedge(const AForm& a, const AForm& b);
BForm wedge(const Hypersurface& hs, const BForm& a, const BForm& b);

/// Exterior derivative on Omega^p_A.
AForm d_A(const AForm& w);

/// d of the NF representative, coefficients re-reduced mod f.
BForm d_B(const Hypersurface& hs, const QElem& b);

/// deg(c dX_J) = deg c + p; negative-infinity sentinel for the zero form.
int deg_aform(const AForm& w);
int deg_bform(const BForm& w);
/// deg(alpha / f^s) = deg alpha - s d.
int deg_locform(const Hypersurface& hs, const LocForm& w);

/// Representative lift Omega_B -> Omega_A (coefficientwise NF reps).
AForm lift_to_aform(const BForm& w);
/// Coefficientwise reduction mod f.
BForm reduce_to_bform(const Hypersurface& hs, const AForm& w);

/// lambda: Omega^(p-1)_B -> Omega^p_{A_f}/Omega^p_A, w -> (df/f) ^ w',
/// the cohomology inverse of the residue map.
LocForm lambda_map(const Hypersurface& hs, const BForm& w);

/// Decides equality of classes in Omega^p_B: with df unimodular over B
/// (witnessed by the certificate), t1 == t2 iff every coefficient of
/// df ^ (t1 - t2) reduces to 0 mod f.
bool bform_class_eq(const Hypersurface& hs, const Certificate& cert,
                    const BForm& t1, const BForm& t2);

/// All m dX_J / f^(p+1) with |J| = p+1 and deg m <= (p+1) d, enumerated
/// deterministically; their residues span the candidates for generators
/// of H^p_dR(X). Empty when p+1 > n.
std::vector<LocForm> spanning_set(const Hypersurface& hs, int p);

} // namespace derham

#endif
