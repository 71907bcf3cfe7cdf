#include "derham/certificate.hpp"

#include <algorithm>
#include <map>

namespace derham {
namespace {

// Exact Gaussian elimination over Q with the fixed pivot order: columns
// left to right, first row with a nonzero entry. Free variables are set to
// zero, which pins a unique particular solution when the system is
// consistent.
std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> M, std::vector<Rational> rhs) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  std::vector<int> pivot_row_of_col(cols, -1);
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols && next_row < rows; ++col) {
    std::size_t sel = next_row;
    while (sel < rows && M[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(M[sel], M[next_row]);
    std::swap(rhs[sel], rhs[next_row]);
    const Rational inv = 1 / M[next_row][col];
    for (std::size_t j = col; j < cols; ++j) M[next_row][j] *= inv;
    rhs[next_row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next_row || M[r][col] == 0) continue;
      const Rational factor = M[r][col];
      for (std::size_t j = col; j < cols; ++j)
        M[r][j] -= factor * M[next_row][j];
      rhs[r] -= factor * rhs[next_row];
    }
    pivot_row_of_col[col] = static_cast<int>(next_row);
    ++next_row;
  }
  // inconsistent if a zero row has nonzero rhs
  for (std::size_t r = next_row; r < rows; ++r)
    if (rhs[r] != 0) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t col = 0; col < cols; ++col)
    if (pivot_row_of_col[col] >= 0) x[col] = rhs[pivot_row_of_col[col]];
  return x;
}

// Monomials of degree <= D in n variables, graded-lex ascending so that
// the unknown order is deterministic.
std::vector<Monomial> monomials_up_to(int nvars, int D) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars) {
      out.emplace_back(std::vector<int>(e));
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, D);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grlex_less(a, b); });
  return out;
}

} // namespace

std::optional<Certificate> find_certificate(const Poly& f, int D_max) {
  if (f.is_zero()) throw std::invalid_argument("f must be nonzero");
  if (D_max < 0) throw std::invalid_argument("D_max must be >= 0");
  const int n = f.nvars();
  const int d = f.degree();
  std::vector<Poly> partials;
  for (int i = 0; i < n; ++i) partials.push_back(f.derivative(i));

  for (int D = 0; D <= D_max; ++D) {
    // unknowns: coefficients of g_1..g_n (deg <= D), then h (deg <= D)
    std::vector<Monomial> basis = monomials_up_to(n, D);
    const std::size_t per_block = basis.size();
    const std::size_t ncols = per_block * (n + 1);

    // equations: coefficient of every monomial of degree <= D + d of
    // sum g_i d_i f + h f  equals [monomial == 1]
    std::map<Monomial, std::size_t, GrlexGreater> eq_index;
    std::vector<Monomial> eq_monomials = monomials_up_to(n, D + d);
    for (std::size_t r = 0; r < eq_monomials.size(); ++r)
      eq_index.emplace(eq_monomials[r], r);

    std::vector<std::vector<Rational>> M(
        eq_monomials.size(), std::vector<Rational>(ncols, 0));
    std::vector<Rational> rhs(eq_monomials.size(), 0);
    Monomial one(n);
    for (std::size_t r = 0; r < eq_monomials.size(); ++r)
      if (eq_monomials[r] == one) rhs[r] = 1;

    for (int block = 0; block <= n; ++block) {
      const Poly& multiplier = block < n ? partials[block] : f;
      for (std::size_t b = 0; b < per_block; ++b) {
        const std::size_t col = block * per_block + b;
        for (const auto& [m, c] : multiplier.terms()) {
          Monomial prod = m * basis[b];
          M[eq_index.at(prod)][col] += c;
        }
      }
    }

    auto sol = solve_linear(std::move(M), std::move(rhs));
    if (!sol) continue;

    Certificate cert;
    cert.degree_bound_used = D;
    for (int i = 0; i < n; ++i) {
      Poly gi(n);
      for (std::size_t b = 0; b < per_block; ++b)
        gi.add_term(basis[b], (*sol)[i * per_block + b]);
      cert.g.push_back(gi);
    }
    Poly h(n);
    for (std::size_t b = 0; b < per_block; ++b)
      h.add_term(basis[b], (*sol)[n * per_block + b]);
    cert.h = h;

    if (!certificate_valid(f, cert))
      throw std::logic_error("solver produced an invalid certificate");
    return cert;
  }
  return std::nullopt;
}

std::optional<Certificate> certify_smooth(const Poly& f, long cap) {
  if (f.is_zero()) throw std::invalid_argument("f must be nonzero");
  const int n = f.nvars();
  const int d = f.degree();
  long bound = 1;
  for (int i = 0; i < n; ++i) {
    if (bound > cap / (d > 0 ? d : 1)) throw CapacityError("d^n exceeds cap");
    bound *= d;
  }
  if (bound > cap) throw CapacityError("d^n exceeds cap");
  return find_certificate(f, static_cast<int>(bound));
}

bool certificate_valid(const Poly& f, const Certificate& cert) {
  const int n = f.nvars();
  if (static_cast<int>(cert.g.size()) != n) return false;
  Poly acc = cert.h * f;
  for (int i = 0; i < n; ++i) acc += cert.g[i] * f.derivative(i);
  return acc == Poly::constant(n, 1);
}

} // namespace derham
