#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace jacring {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "a" or "a/b" with optional sign.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// True iff gcd(num, den) == 1 and den > 0.
bool is_canonical(const Rational& r);

std::size_t bit_size(const Integer& z);
std::size_t bit_size(const Rational& r);

Integer binomial(long n, long k);
/// Generalized binomial a(a-1)...(a-k+1)/k!.
Rational binomial(const Rational& a, long k);

Integer lcm_of_denominators_accumulate(const Integer& acc, const Rational& r);

const char* version();

}  // namespace jacring
