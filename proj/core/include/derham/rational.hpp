#ifndef DERHAM_RATIONAL_HPP
#define DERHAM_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace derham {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

} // namespace derham

#endif
