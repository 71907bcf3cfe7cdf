#ifndef DERHAM_POLY_HPP
#define DERHAM_POLY_HPP

#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "derham/monomial.hpp"
#include "derham/rational.hpp"

namespace derham {

/// Degree of the zero polynomial; sorts below every attainable degree.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

/// Sparse multivariate polynomial over Q. Terms are kept in graded-lex
/// order (largest first) and never store a zero coefficient.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i); // 0-based index
  static Poly term(Monomial m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  int degree() const;
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;

  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  void add_term(const Monomial& m, const Rational& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Poly pow(int e) const;

  /// d/dX_i, 0-based.
  Poly derivative(int i) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Substitute values[i] for X_i; values live in an arbitrary ring of
  /// polynomials with a common variable count.
  Poly substitute(const std::vector<Poly>& values) const;

 private:
  int nvars_ = 0;
  TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

struct DivModResult {
  Poly quotient;
  Poly remainder;
};

/// One-divisor division of g by f^nu under graded-lex; the remainder is the
/// canonical normal form of g in A/(f^nu).
DivModResult divmod_by_power(const Poly& g, const Poly& f, int nu);

/// Normal form of g modulo (f).
Poly normal_form(const Poly& g, const Poly& f);

/// X0^(d+1) * f(X/X0); the homogenizing variable becomes variable 0, the
/// original variable i moves to slot i+1.
Poly homogenize_generous(const Poly& f);

} // namespace derham

#endif
