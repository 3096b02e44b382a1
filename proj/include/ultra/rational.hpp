#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ultra {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (whitespace tolerated). Throws Error(Parse).
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Exponent of p in a nonzero integer.
long padic_valuation(const Integer& n, std::uint32_t p);
/// Exponent of p in a nonzero rational (numerator minus denominator).
long padic_valuation(const Rational& q, std::uint32_t p);

/// True iff the reduced denominator of q is a power of p.
bool denominator_is_power_of(const Rational& q, std::uint32_t p);

/// p^k for integer k (negative allowed).
Rational rational_pow(std::uint32_t p, long k);

bool is_prime(std::uint32_t p);

}  // namespace ultra
