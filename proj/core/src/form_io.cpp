#include "derham/form_io.hpp"

#include "derham/parse.hpp"

namespace derham {
namespace {

std::string differential_string(int nvars, const IndexSet& J) {
  std::string out;
  for (std::size_t k = 0; k < J.size(); ++k) {
    if (k > 0) out += "/\\";
    out += "d(" + var_name(nvars, J[k]) + ")";
  }
  return out;
}

std::string term_string(int nvars, const IndexSet& J, const Poly& c) {
  std::string diff = differential_string(nvars, J);
  if (diff.empty()) return to_string(c);
  if (c == Poly::constant(nvars, 1)) return diff;
  std::string cs = to_string(c);
  if (c.terms().size() > 1) cs = "(" + cs + ")";
  return cs + " " + diff;
}

} // namespace

std::string to_string(const AForm& w) {
  if (w.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [J, c] : w.terms) {
    if (!first) out += " + ";
    first = false;
    out += term_string(w.nvars, J, c);
  }
  return out;
}

std::string to_string(const BForm& w) {
  if (w.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [J, c] : w.terms) {
    if (!first) out += " + ";
    first = false;
    out += term_string(w.nvars, J, c.rep);
  }
  return out;
}

std::string to_string(const LocForm& w) {
  std::string out = to_string(w.numerator);
  if (w.pole_order == 1) out += " / f";
  else if (w.pole_order > 1) out += " / f^" + std::to_string(w.pole_order);
  return out;
}

} // namespace derham
