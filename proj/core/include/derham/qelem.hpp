#ifndef DERHAM_QELEM_HPP
#define DERHAM_QELEM_HPP

#include "derham/hypersurface.hpp"

namespace derham {

/// Element of the coordinate ring B = A/(f), stored as the canonical
/// normal form of a representative modulo f. The graded order makes the
/// stored degree minimal over the coset.
struct QElem {
  Poly rep;

  bool is_zero() const { return rep.is_zero(); }
  int degree() const { return rep.degree(); }
  bool operator==(const QElem& o) const { return rep == o.rep; }
};

inline QElem make_qelem(const Hypersurface& hs, const Poly& g) {
  return QElem{normal_form(g, hs.f)};
}

inline QElem qadd(const QElem& a, const QElem& b) {
  return QElem{a.rep + b.rep}; // sum of NFs is reduced
}

inline QElem qsub(const QElem& a, const QElem& b) { return QElem{a.rep - b.rep}; }

inline QElem qmul(const Hypersurface& hs, const QElem& a, const QElem& b) {
  return make_qelem(hs, a.rep * b.rep);
}

inline QElem qscale(const QElem& a, const Rational& c) { return QElem{a.rep * c}; }

} // namespace derham

#endif
