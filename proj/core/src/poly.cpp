#include "derham/poly.hpp"

namespace derham {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
  Monomial m(nvars);
  m.exponents[i] = 1;
  Poly p(nvars);
  p.add_term(m, 1);
  return p;
}

Poly Poly::term(Monomial m, const Rational& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return kDegNegInf;
  return terms_.begin()->first.degree();
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Poly::constant_term() const { return coeff(Monomial(nvars_)); }

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading_monomial of zero");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading_coeff of zero");
  return terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial arity");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
  Poly r(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Poly r = Poly::constant(nvars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative(int i) const {
  if (i < 0 || i >= nvars_) throw std::out_of_range("variable index");
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponents[i];
    if (e == 0) continue;
    Monomial dm = m;
    dm.exponents[i] = e - 1;
    r.add_term(dm, c * e);
  }
  return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("point arity mismatch");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m.exponents[i]; ++e) v *= point[i];
    total += v;
  }
  return total;
}

Poly Poly::substitute(const std::vector<Poly>& values) const {
  if (static_cast<int>(values.size()) != nvars_)
    throw std::invalid_argument("substitution arity mismatch");
  int out_nvars = nvars_;
  if (!values.empty()) out_nvars = values[0].nvars();
  // cache powers per variable
  std::vector<std::vector<Poly>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i)
    powers[i].push_back(Poly::constant(out_nvars, 1));
  Poly total(out_nvars);
  for (const auto& [m, c] : terms_) {
    Poly v = Poly::constant(out_nvars, c);
    for (int i = 0; i < nvars_; ++i) {
      int e = m.exponents[i];
      while (static_cast<int>(powers[i].size()) <= e)
        powers[i].push_back(powers[i].back() * values[i]);
      if (e > 0) v = v * powers[i][e];
    }
    total += v;
  }
  return total;
}

DivModResult divmod_by_power(const Poly& g, const Poly& f, int nu) {
  if (f.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (nu < 1) throw std::invalid_argument("power must be positive");
  Poly fnu = f.pow(nu);
  const Monomial& lm = fnu.leading_monomial();
  const Rational& lc = fnu.leading_coeff();
  Poly q(g.nvars()), r(g.nvars()), p = g;
  while (!p.is_zero()) {
    const Monomial& pm = p.leading_monomial();
    const Rational pc = p.leading_coeff();
    if (lm.divides(pm)) {
      Monomial qm = lm.divide_into(pm);
      Rational qc = pc / lc;
      Poly t = Poly::term(qm, qc);
      q += t;
      p -= t * fnu;
    } else {
      r.add_term(pm, pc);
      p.add_term(pm, -pc);
    }
  }
  return {q, r};
}

Poly normal_form(const Poly& g, const Poly& f) {
  return divmod_by_power(g, f, 1).remainder;
}

Poly homogenize_generous(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("homogenize of zero");
  int n = f.nvars();
  int d = f.degree();
  Poly r(n + 1);
  for (const auto& [m, c] : f.terms()) {
    Monomial hm(n + 1);
    hm.exponents[0] = d + 1 - m.degree();
    for (int i = 0; i < n; ++i) hm.exponents[i + 1] = m.exponents[i];
    r.add_term(hm, c);
  }
  return r;
}

} // namespace derham
