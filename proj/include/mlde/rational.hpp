#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mlde {

// Always canonical: gmpxx arithmetic reduces every result.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "p/q", "-p/q" with arbitrary-size integers.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

long lcm_long(long a, long b);
long gcd_long(long a, long b);
// Denominator as a machine integer; throws if it does not fit.
long den_long(const Rational& r);
long to_long(const Integer& z);

Rational rpow(const Rational& base, long exponent);

}  // namespace mlde
