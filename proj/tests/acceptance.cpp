// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, zero tolerance unless a runtime limit is stated.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "derham/bounds.hpp"
#include "derham/completion.hpp"
#include "derham/oracle.hpp"
#include "derham/parse.hpp"
#include "derham/residue.hpp"

using namespace derham;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void report(int criterion, const char* what, bool ok) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what);
  if (!ok) ++failures;
}

Poly random_poly(std::mt19937& rng, int nvars, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> expo(0, max_deg);
  Poly p(nvars);
  int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    Monomial m(nvars);
    int remaining = max_deg;
    for (int i = 0; i < nvars; ++i) {
      int e = expo(rng) % (remaining + 1);
      m.exponents[i] = e;
      remaining -= e;
    }
    int c = coeff(rng);
    if (c != 0) p.add_term(m, c);
  }
  return p;
}

} // namespace

int main() {
  const Poly curve_f = parse_poly("x*y^2 - x - 1", 2);
  const Hypersurface curve = make_hypersurface(curve_f);
  const Poly cubic_f = parse_poly("x^3 - x", 1);
  const Hypersurface cubic = make_hypersurface(cubic_f);

  // ---- 1. certificate regression --------------------------------------
  {
    Timer t;
    auto cert = certify_smooth(curve_f);
    bool ok = cert.has_value() && cert->degree_bound_used <= 1 &&
              certificate_valid(curve_f, *cert) && t.seconds() < 1.0;
    report(1, "certify x*y^2-x-1: degree <= 1, identity exact, < 1 s", ok);
  }

  const Certificate curve_cert = *certify_smooth(curve_f);
  const Certificate cubic_cert = *certify_smooth(cubic_f);

  // ---- 2. bound reproduction ------------------------------------------
  {
    bool ok = derham_degree_bound(3, 2, 1) == 3528 &&
              gysin_degree_bound(3, 2, 2, 2) == 3528;
    report(2, "derham_degree_bound(3,2,1) = gysin_degree_bound(3,2,2,2) = 3528",
           ok);
  }

  // ---- 3. univariate residues vs classical residues -------------------
  {
    Timer t;
    bool ok = true;
    PsiData psi = build_psi(cubic, cubic_cert, 2);
    RationalRootData roots = make_root_data(
        cubic_f, {Rational(0), Rational(1), Rational(-1)}, Rational(1));
    {
      AForm num = aform_zero(1, 1);
      aform_add_term(num, {0}, parse_poly("x^2 + x", 1));
      ResidueResult r = residue(cubic, psi, LocForm{num, 1});
      ok = ok && !r.value.is_zero() &&
           r.value.terms.at({}).rep == parse_poly("1/2*x^2 + 1/2*x", 1);
    }
    std::mt19937 rng(1003);
    for (int k = 0; k < 25 && ok; ++k) {
      Poly g = random_poly(rng, 1, 6, 6);
      for (int s = 1; s <= 2 && ok; ++s) {
        AForm num = aform_zero(1, 1);
        aform_add_term(num, {0}, g);
        ResidueResult r = residue(cubic, psi, LocForm{num, s});
        auto classical = univariate_residues(g, roots, s);
        Poly expect(1);
        for (int i = 0; i < 3; ++i)
          expect += idempotent(roots, i) * classical[i];
        QElem lhs =
            r.value.is_zero() ? QElem{Poly::zero(1)} : r.value.terms.at({});
        ok = ok && lhs == make_qelem(cubic, expect);
      }
    }
    ok = ok && t.seconds() < 30.0;
    report(3, "univariate residue = sum of classical residues, 25 random g, < 30 s",
           ok);
  }

  // ---- 4. curve residue regression ------------------------------------
  {
    Timer t;
    PsiData psi = build_psi(curve, curve_cert, 2);
    bool ok = true;
    auto top_form = [&](const Poly& h) {
      AForm num = aform_zero(2, 2);
      aform_add_term(num, {0, 1}, h);
      return LocForm{num, 1};
    };
    BForm r1 = residue(curve, psi, top_form(parse_poly("y + 1", 2))).value;
    BForm r2 = residue(curve, psi, top_form(parse_poly("y - 1", 2))).value;
    ok = ok && r1.terms.size() == 1 &&
         r1.terms.at({1}).rep == parse_poly("x*y + x", 2);
    ok = ok && r2.terms.size() == 1 &&
         r2.terms.at({1}).rep == parse_poly("x*y - x", 2);
    ok = ok && curve_pullback_residues(curve, r1) ==
                   std::pair<Rational, Rational>{1, 0};
    ok = ok && curve_pullback_residues(curve, r2) ==
                   std::pair<Rational, Rational>{0, 1};
    std::mt19937 rng(1004);
    for (int k = 0; k < 10 && ok; ++k) {
      Poly h = random_poly(rng, 2, 4, 6);
      BForm r = residue(curve, psi, top_form(h)).value;
      BForm expect = bform_zero(2, 1);
      bform_add_term(expect, {1},
                     make_qelem(curve, Poly::variable(2, 0) * h));
      ok = ok && r == expect;
    }
    ok = ok && t.seconds() < 60.0;
    report(4, "curve residues match X h dY and pullback residues (1,0)/(0,1), < 60 s",
           ok);
  }

  // ---- 5. completion roundtrip ----------------------------------------
  {
    PsiData psi = build_psi(curve, curve_cert, 3);
    bool ok = true;
    std::mt19937 rng(1005);
    for (int k = 0; k < 20 && ok; ++k) {
      Poly a = random_poly(rng, 2, 4, 6);
      SeriesA back = psi_hat(psi, psi_hat_inv(psi, a, 3));
      ok = ok && series_collapse(back) ==
                     series_collapse(series_from_poly(curve, a, 3));
    }
    SeriesB t = psi_hat_inv(psi, curve_f, 3);
    ok = ok && t.coeffs[0].is_zero() &&
         t.coeffs[1].rep == Poly::constant(2, 1) && t.coeffs[2].is_zero() &&
         t.coeffs[3].is_zero();
    SeriesB xx = psi_hat_inv(psi, Poly::variable(2, 0), 3);
    ok = ok && xx.coeffs[0].rep == Poly::variable(2, 0) &&
         xx.coeffs[1].rep == Poly::variable(2, 0) && xx.coeffs[2].is_zero() &&
         xx.coeffs[3].is_zero();
    SeriesB xy = psi_hat_inv(psi, Poly::variable(2, 1), 3);
    ok = ok && xy.coeffs[0].rep == Poly::variable(2, 1) &&
         xy.coeffs[1].is_zero() && xy.coeffs[2].is_zero() &&
         xy.coeffs[3].is_zero();
    report(5, "psi_hat o psi_hat_inv = id mod f^4; psi_hat_inv(f) = T; Xi_x = x + x T, Xi_y = y",
           ok);
  }

  // ---- 6. degree-bound property suite ----------------------------------
  {
    // Bounds are asserted inside build_psi / psi_hat_inv / residue for
    // d = 3 during criteria 3-5 (any violation throws). Re-run the same
    // workloads with explicit re-checks.
    bool ok = true;
    try {
      PsiData psi = build_psi(curve, curve_cert, 3);
      Integer gamma = 2 * 3 + 1; // 2 d^(n-1) + 1, d = 3, n = 2
      Integer dpow = 1;
      for (int v = 0; v <= 3; ++v) {
        for (int i = 0; i < 2; ++i) {
          int deg = psi.xi[i].coeffs[v].degree();
          if (deg != kDegNegInf && Integer(deg) > dpow * gamma) ok = false;
        }
        dpow *= 3;
      }
      std::mt19937 rng(1006);
      Integer base = 2 * 9 + 3; // 2 d^n + d
      for (int k = 0; k < 10 && ok; ++k) {
        Poly a = random_poly(rng, 2, 4, 6);
        SeriesB s = psi_hat_inv(psi, a, 3);
        Integer bound = a.degree();
        for (int mu = 0; mu <= 3; ++mu) {
          int deg = s.coeffs[mu].degree();
          if (deg != kDegNegInf && Integer(deg) > bound) ok = false;
          bound *= base;
        }
      }
      for (int k = 0; k < 10 && ok; ++k) {
        Poly h = random_poly(rng, 2, 4, 6);
        AForm num = aform_zero(2, 2);
        aform_add_term(num, {0, 1}, h);
        LocForm w{num, 1};
        ResidueResult r = residue(curve, psi, w);
        int deg = deg_bform(r.value);
        if (deg != kDegNegInf &&
            Integer(deg) > gysin_degree_bound(3, 2, 1, deg_locform(curve, w)))
          ok = false;
      }
    } catch (const BoundViolation&) {
      ok = false;
    }
    report(6, "lift / completion / residue degree bounds: zero violations",
           ok);
  }

  // ---- 7. Res o lambda identity ----------------------------------------
  {
    PsiData psi = build_psi(curve, curve_cert, 1);
    bool ok = true;
    std::mt19937 rng(1007);
    for (int k = 0; k < 10 && ok; ++k) {
      int pm1 = k % 2;
      BForm w = bform_zero(2, pm1);
      if (pm1 == 0) {
        bform_add_term(w, {}, make_qelem(curve, random_poly(rng, 2, 4, 5)));
      } else {
        bform_add_term(w, {0}, make_qelem(curve, random_poly(rng, 2, 4, 5)));
        bform_add_term(w, {1}, make_qelem(curve, random_poly(rng, 2, 4, 5)));
      }
      ResidueResult r = residue(curve, psi, lambda_map(curve, w));
      // 0-forms come back representative-for-representative; 1-forms come
      // back as the canonical representative modulo the df = 0 relation in
      // Omega^1_B, so the exact comparison is class equality.
      ok = ok && bform_class_eq(curve, curve_cert, r.value, w);
      if (pm1 == 0) ok = ok && r.value == w;
    }
    report(7, "residue(lambda(w)) = w exactly (class equality in Omega_B), 10 random w",
           ok);
  }

  // ---- 8. homomorphism laws and singular input -------------------------
  {
    PsiData psi = build_psi(curve, curve_cert, 3);
    bool ok = true;
    std::mt19937 rng(1008);
    for (int k = 0; k < 20 && ok; ++k) {
      Poly b1 = random_poly(rng, 2, 3, 5);
      Poly b2 = random_poly(rng, 2, 3, 5);
      ok = ok && series_equal(psi_apply(psi, b1 * b2),
                              series_mul(psi_apply(psi, b1),
                                         psi_apply(psi, b2)));
      ok = ok && series_equal(psi_apply(psi, b1 + b2),
                              series_add(psi_apply(psi, b1),
                                         psi_apply(psi, b2)));
      SeriesB s1 = psi_hat_inv(psi, b1, 3);
      SeriesB s2 = psi_hat_inv(psi, b2, 3);
      SeriesB prod = psi_hat_inv(psi, b1 * b2, 3);
      for (int v = 0; v <= 3 && ok; ++v) {
        QElem acc{Poly::zero(2)};
        for (int i = 0; i <= v; ++i)
          acc = qadd(acc, qmul(curve, s1.coeffs[i], s2.coeffs[v - i]));
        ok = ok && prod.coeffs[v] == acc;
      }
    }
    ok = ok && !certify_smooth(parse_poly("x*y", 2)).has_value();
    report(8, "psi and psi_hat_inv homomorphism laws, 20 random pairs; x*y -> NotFound",
           ok);
  }

  // ---- 9. spanning set --------------------------------------------------
  {
    Timer t;
    PsiData psi = build_psi(curve, curve_cert, 2);
    auto span = spanning_set(curve, 1);
    bool ok = span.size() == 28;
    Integer bound = derham_degree_bound(3, 2, 1);
    for (const LocForm& w : span) {
      if (!ok) break;
      ResidueResult r = residue(curve, psi, w);
      int deg = deg_bform(r.value);
      if (deg != kDegNegInf && Integer(deg) > bound) ok = false;
    }
    ok = ok && t.seconds() < 120.0;
    report(9, "spanning_set(curve, 1): 28 elements, all residues of degree <= 3528, < 120 s",
           ok);
  }

  return failures == 0 ? 0 : 1;
}
