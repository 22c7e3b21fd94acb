#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hsec {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", "-p/q" or "n"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "n" when the denominator is 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

inline Rational floor_div(const Rational& a, const Rational& b) {
  Rational r = a / b;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(f);
}

}  // namespace hsec
