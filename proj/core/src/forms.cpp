#include "derham/forms.hpp"

#include <algorithm>

namespace derham {
namespace {

// Sign of merging two strictly increasing index sets; 0 if they overlap.
// merged receives the union when the sets are disjoint.
int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet& merged) {
  merged.clear();
  std::size_t i = 0, j = 0;
  int inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      merged.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining elements of a
      inversions += static_cast<int>(a.size() - i);
      merged.push_back(b[j++]);
    }
  }
  while (i < a.size()) merged.push_back(a[i++]);
  while (j < b.size()) merged.push_back(b[j++]);
  return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

AForm aform_zero(int nvars, int p) { return AForm{nvars, p, {}}; }
BForm bform_zero(int nvars, int p) { return BForm{nvars, p, {}}; }

void aform_add_term(AForm& w, IndexSet J, const Poly& c) {
  if (static_cast<int>(J.size()) != w.p)
    throw std::invalid_argument("index set size mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = w.terms.try_emplace(std::move(J), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) w.terms.erase(it);
  }
}

void bform_add_term(BForm& w, IndexSet J, const QElem& c) {
  if (static_cast<int>(J.size()) != w.p)
    throw std::invalid_argument("index set size mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = w.terms.try_emplace(std::move(J), c);
  if (!inserted) {
    it->second = qadd(it->second, c);
    if (it->second.is_zero()) w.terms.erase(it);
  }
}

AForm aform_add(const AForm& a, const AForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.p != b.p || a.nvars != b.nvars)
    throw std::invalid_argument("form mismatch");
  AForm r = a;
  for (const auto& [J, c] : b.terms) aform_add_term(r, J, c);
  return r;
}

AForm aform_sub(const AForm& a, const AForm& b) {
  if (b.is_zero()) return a;
  AForm nb = b;
  for (auto& [J, c] : nb.terms) c = -c;
  return aform_add(a, nb);
}

AForm aform_scale(const AForm& a, const Poly& c) {
  AForm r = aform_zero(a.nvars, a.p);
  for (const auto& [J, k] : a.terms) aform_add_term(r, J, k * c);
  return r;
}

BForm bform_add(const BForm& a, const BForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.p != b.p || a.nvars != b.nvars)
    throw std::invalid_argument("form mismatch");
  BForm r = a;
  for (const auto& [J, c] : b.terms) bform_add_term(r, J, c);
  return r;
}

BForm bform_sub(const BForm& a, const BForm& b) {
  if (b.is_zero()) return a;
  BForm nb = b;
  for (auto& [J, c] : nb.terms) c = QElem{-c.rep};
  return bform_add(a, nb);
}

BForm bform_scale(const Hypersurface& hs, const BForm& a, const QElem& c) {
  BForm r = bform_zero(a.nvars, a.p);
  for (const auto& [J, k] : a.terms) bform_add_term(r, J, qmul(hs, k, c));
  return r;
}

AForm wedge(const AForm& a, const AForm& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("nvars mismatch");
  AForm r = aform_zero(a.nvars, a.p + b.p);
  IndexSet merged;
  for (const auto& [J1, c1] : a.terms)
    for (const auto& [J2, c2] : b.terms) {
      int sign = merge_sign(J1, J2, merged);
      if (sign == 0) continue;
      aform_add_term(r, merged, sign > 0 ? c1 * c2 : -(c1 * c2));
    }
  return r;
}

BForm wedge(const Hypersurface& hs, const BForm& a, const BForm& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("nvars mismatch");
  BForm r = bform_zero(a.nvars, a.p + b.p);
  IndexSet merged;
  for (const auto& [J1, c1] : a.terms)
    for (const auto& [J2, c2] : b.terms) {
      int sign = merge_sign(J1, J2, merged);
      if (sign == 0) continue;
      QElem prod = qmul(hs, c1, c2);
      bform_add_term(r, merged, sign > 0 ? prod : QElem{-prod.rep});
    }
  return r;
}

AForm d_A(const AForm& w) {
  AForm r = aform_zero(w.nvars, w.p + 1);
  IndexSet merged;
  for (const auto& [J, c] : w.terms)
    for (int i = 0; i < w.nvars; ++i) {
      Poly dc = c.derivative(i);
      if (dc.is_zero()) continue;
      int sign = merge_sign({i}, J, merged);
      if (sign == 0) continue;
      aform_add_term(r, merged, sign > 0 ? dc : -dc);
    }
  return r;
}

BForm d_B(const Hypersurface& hs, const QElem& b) {
  BForm r = bform_zero(hs.n, 1);
  for (int i = 0; i < hs.n; ++i)
    bform_add_term(r, {i}, make_qelem(hs, b.rep.derivative(i)));
  return r;
}

int deg_aform(const AForm& w) {
  if (w.is_zero()) return kDegNegInf;
  int m = kDegNegInf;
  for (const auto& [J, c] : w.terms) m = std::max(m, c.degree());
  return m + w.p;
}

int deg_bform(const BForm& w) {
  if (w.is_zero()) return kDegNegInf;
  int m = kDegNegInf;
  for (const auto& [J, c] : w.terms) m = std::max(m, c.degree());
  return m + w.p;
}

int deg_locform(const Hypersurface& hs, const LocForm& w) {
  int dn = deg_aform(w.numerator);
  if (dn == kDegNegInf) return kDegNegInf;
  return dn - w.pole_order * hs.d;
}

AForm lift_to_aform(const BForm& w) {
  AForm r = aform_zero(w.nvars, w.p);
  for (const auto& [J, c] : w.terms) aform_add_term(r, J, c.rep);
  return r;
}

BForm reduce_to_bform(const Hypersurface& hs, const AForm& w) {
  BForm r = bform_zero(w.nvars, w.p);
  for (const auto& [J, c] : w.terms) bform_add_term(r, J, make_qelem(hs, c));
  return r;
}

LocForm lambda_map(const Hypersurface& hs, const BForm& w) {
  AForm df = d_A(AForm{hs.n, 0, {{IndexSet{}, hs.f}}});
  return LocForm{wedge(df, lift_to_aform(w)), 1};
}

bool bform_class_eq(const Hypersurface& hs, const Certificate& cert,
                    const BForm& t1, const BForm& t2) {
  (void)cert; // the certificate is what makes the df-wedge test decisive
  if (!t1.is_zero() && !t2.is_zero() && t1.p != t2.p)
    throw std::invalid_argument("form degree mismatch");
  AForm diff = aform_sub(lift_to_aform(t1), lift_to_aform(t2));
  AForm df = d_A(AForm{hs.n, 0, {{IndexSet{}, hs.f}}});
  return reduce_to_bform(hs, wedge(df, diff)).is_zero();
}

std::vector<LocForm> spanning_set(const Hypersurface& hs, int p) {
  std::vector<LocForm> out;
  const int k = p + 1;
  if (k > hs.n) return out;
  // (p+1)-subsets of {0..n-1} in lexicographic order
  std::vector<IndexSet> subsets;
  IndexSet cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int i = start; i < hs.n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  // monomials of degree <= (p+1) d, graded-lex ascending
  const int dmax = k * hs.d;
  std::vector<Monomial> monos;
  std::vector<int> e(hs.n, 0);
  auto mrec = [&](auto&& self, int var, int remaining) -> void {
    if (var == hs.n) {
      monos.emplace_back(std::vector<int>(e));
      return;
    }
    for (int i = 0; i <= remaining; ++i) {
      e[var] = i;
      self(self, var + 1, remaining - i);
    }
    e[var] = 0;
  };
  mrec(mrec, 0, dmax);
  std::sort(monos.begin(), monos.end(),
            [](const Monomial& a, const Monomial& b) { return grlex_less(a, b); });
  for (const IndexSet& J : subsets)
    for (const Monomial& m : monos) {
      AForm num = aform_zero(hs.n, k);
      aform_add_term(num, J, Poly::term(m, 1));
      out.push_back(LocForm{num, k});
    }
  return out;
}

} // namespace derham
