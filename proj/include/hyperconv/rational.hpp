#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hyperconv {

// Every algebraic quantity in the library is an exact rational.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Parses "p/q", "p" or "-p/q". Throws SpecError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// Always "num/den", including for integers ("3/1").
std::string to_fraction_string(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

std::string integer_string(const mpz_class& z);

}  // namespace hyperconv
