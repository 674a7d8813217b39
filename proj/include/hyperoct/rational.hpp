#pragma once

#include <gmpxx.h>

#include <string>

namespace hyperoct {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text);

}  // namespace hyperoct
