#pragma once

#include "taulab/numeric.hpp"

#include <compare>
#include <string>

namespace taulab {

/// Sign of a + b*sqrt(r) for integers a, b and a positive non-square r.
int sign_of(const Integer& a, const Integer& b, const Integer& r);
/// Sign of a + b*sqrt(m) + c*sqrt(n), m and n positive non-squares.
int sign_of(const Integer& a, const Integer& b, const Integer& m, const Integer& c, const Integer& n);

/// The irrational number (p + q*sqrt(r)) / s.
///
/// Stored with r square-free, s > 0 and gcd(p, q, s) == 1, so equal values have
/// equal fields. Comparisons never leave integer arithmetic.
class Surd {
 public:
  /// Requires q != 0, s != 0 and r a positive non-square.
  Surd(Integer p, Integer q, Integer r, Integer s);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& r() const { return r_; }
  const Integer& s() const { return s_; }

  Integer floor() const;
  /// floor(value * 2^bits) / 2^bits, strictly below the value.
  Rational lower_dyadic(unsigned bits) const;
  /// Strictly above the value, within 2^-bits.
  Rational upper_dyadic(unsigned bits) const;

  /// slope * value + offset.
  Surd affine(const Rational& slope, const Rational& offset) const;
  Surd operator+(const Rational& t) const { return affine(1, t); }

  /// The literal "surd(p,q,r,s)".
  std::string to_string() const;
  /// Fixed-precision decimal rendering for human-readable output only.
  std::string to_decimal(unsigned digits = 6) const;

  friend bool operator==(const Surd&, const Surd&) = default;

 private:
  Integer p_, q_, r_, s_;
};

std::strong_ordering compare(const Surd& x, const Rational& y);
std::strong_ordering compare(const Surd& x, const Surd& y);

/// The surd a + (b - a) * (sqrt(r) - floor(sqrt(r))), strictly between a < b.
Surd surd_between(const Rational& a, const Rational& b, const Integer& r);

}  // namespace taulab
