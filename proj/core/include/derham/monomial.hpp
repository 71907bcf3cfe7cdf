#ifndef DERHAM_MONOMIAL_HPP
#define DERHAM_MONOMIAL_HPP

#include <compare>
#include <numeric>
#include <vector>

namespace derham {

/// Exponent vector of a power product in n variables.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(int nvars) : exponents(nvars, 0) {}
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

  int nvars() const { return static_cast<int>(exponents.size()); }
  int degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
  }

  bool divides(const Monomial& other) const {
    for (int i = 0; i < nvars(); ++i)
      if (exponents[i] > other.exponents[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.exponents[i] += o.exponents[i];
    return r;
  }

  // quotient, valid only when this->divides is checked by the caller
  Monomial divide_into(const Monomial& num) const {
    Monomial r = num;
    for (int i = 0; i < nvars(); ++i) r.exponents[i] -= exponents[i];
    return r;
  }

  bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

/// Graded lexicographic order, X1 > X2 > ... > Xn. Total degree decides
/// first; ties broken lexicographically on the exponent vector.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents < b.exponents;
}

/// Comparator putting the grlex-largest monomial first (map iteration order
/// equals the printed term order).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(b, a);
  }
};

} // namespace derham

#endif
