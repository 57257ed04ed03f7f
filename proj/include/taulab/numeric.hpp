#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace taulab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

int sign(const Integer& x);
int sign(const Rational& x);

/// Floor division for arbitrary signs (den != 0).
Integer floor_div(const Integer& num, const Integer& den);
Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);

/// Largest k with k*k <= x, x >= 0.
Integer isqrt(const Integer& x);
bool is_perfect_square(const Integer& x);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

std::string to_string(const Integer& x);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

}  // namespace taulab
