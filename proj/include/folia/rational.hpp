#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace folia {

using BigInt = mpz_class;
using Rational = mpq_class;

// Canonical p/q; throws PreconditionError on q == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const Rational& r);

// Throws NonIntegerResult naming `what` when r is not integral.
BigInt require_integer(const Rational& r, std::string_view what);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

// Accepts "p" or "p/q" with an optional leading sign.
Rational parse_rational(std::string_view text);

BigInt binomial(long n, long k);  // 0 when k < 0 or k > n
BigInt ipow(const BigInt& base, unsigned long e);
Rational rpow(const Rational& base, long e);  // negative e requires base != 0

// Largest e with base^e <= x; base >= 2, x >= 1.
unsigned long floor_log(const BigInt& x, const BigInt& base);

}  // namespace folia
