#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace topvert {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// Accepts "n" or "n/d"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// acc += x * y without allocating a temporary per call.
inline void add_product(Rational& acc, const Rational& x, const Rational& y, Rational& scratch) {
  mpq_mul(scratch.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
  mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), scratch.get_mpq_t());
}

}  // namespace topvert
