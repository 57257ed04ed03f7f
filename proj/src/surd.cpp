#include "taulab/surd.hpp"

#include "taulab/error.hpp"

namespace taulab {

int sign_of(const Integer& a, const Integer& b, const Integer& r) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the term with the larger square wins.
  const Integer d = a * a - b * b * r;
  const int sd = sgn(d);
  if (sd > 0) return sa;
  if (sd < 0) return sb;
  return 0;
}

int sign_of(const Integer& a, const Integer& b, const Integer& m, const Integer& c, const Integer& n) {
  if (m == n) return sign_of(a, b + c, m);
  const int su = sign_of(a, b, m);
  const int sv = sgn(c);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // u = a + b*sqrt(m), v = c*sqrt(n) of opposite sign: sign(u + v) = su * sign(u^2 - v^2).
  const int s = sign_of(a * a + b * b * m - c * c * n, 2 * a * b, m);
  return su * s;
}

namespace {

Integer raw_floor(const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
  // q*sqrt(r) lies strictly between consecutive integers, so the floor of
  // (N + theta)/s with theta in (0,1) is floor(N/s).
  const Integer k = isqrt(q * q * r);
  const Integer n = sgn(q) > 0 ? Integer(p + k) : Integer(p - k - 1);
  return floor_div(n, s);
}

}  // namespace

Surd::Surd(Integer p, Integer q, Integer r, Integer s) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "surd with q = 0 is rational");
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "surd with s = 0");
  if (r <= 0 || is_perfect_square(r)) {
    throw Error(ErrorKind::InvalidArgument, "surd radicand " + r.get_str() + " is not a positive non-square");
  }
  if (s < 0) {
    p = -p;
    q = -q;
    s = -s;
  }
  // Pull square factors out of r; radicands in practice are small.
  for (Integer i = 2; i * i <= r && i < 100000; ++i) {
    const Integer sq = i * i;
    while (r % sq == 0) {
      r /= sq;
      q *= i;
    }
  }
  Integer g = gcd(gcd(p, q), s);
  if (g > 1) {
    p /= g;
    q /= g;
    s /= g;
  }
  p_ = std::move(p);
  q_ = std::move(q);
  r_ = std::move(r);
  s_ = std::move(s);
}

Integer Surd::floor() const { return raw_floor(p_, q_, r_, s_); }

Rational Surd::lower_dyadic(unsigned bits) const {
  const Integer scale = Integer(1) << bits;
  return make_rational(raw_floor(p_ * scale, q_ * scale, r_, s_), scale);
}

Rational Surd::upper_dyadic(unsigned bits) const {
  const Integer scale = Integer(1) << bits;
  return make_rational(raw_floor(p_ * scale, q_ * scale, r_, s_) + 1, scale);
}

Surd Surd::affine(const Rational& slope, const Rational& offset) const {
  if (slope == 0) throw Error(ErrorKind::InvalidArgument, "affine image with zero slope");
  const Rational a = slope * make_rational(p_, s_) + offset;
  const Rational b = slope * make_rational(q_, s_);
  const Integer d = lcm(a.get_den(), b.get_den());
  return Surd(a.get_num() * (d / a.get_den()), b.get_num() * (d / b.get_den()), r_, d);
}

std::string Surd::to_string() const {
  return "surd(" + p_.get_str() + "," + q_.get_str() + "," + r_.get_str() + "," + s_.get_str() + ")";
}

std::string Surd::to_decimal(unsigned digits) const {
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const Integer scaled = raw_floor(p_ * scale, q_ * scale, r_, s_);
  Integer whole = floor_div(scaled, scale);
  Integer frac = scaled - whole * scale;
  std::string f = frac.get_str();
  return whole.get_str() + "." + std::string(digits - f.size(), '0') + f + "...";
}

std::strong_ordering compare(const Surd& x, const Rational& y) {
  const Integer& n = y.get_num();
  const Integer& d = y.get_den();
  return sign_of(d * x.p() - n * x.s(), d * x.q(), x.r()) <=> 0;
}

std::strong_ordering compare(const Surd& x, const Surd& y) {
  return sign_of(y.s() * x.p() - x.s() * y.p(), y.s() * x.q(), x.r(), -x.s() * y.q(), y.r()) <=> 0;
}

Surd surd_between(const Rational& a, const Rational& b, const Integer& r) {
  if (!(a < b)) throw Error(ErrorKind::EmptyInterval, "surd_between needs a < b");
  const Integer k = isqrt(r);
  const Rational w = b - a;
  const Rational base = a - w * k;
  const Integer d = lcm(base.get_den(), w.get_den());
  return Surd(base.get_num() * (d / base.get_den()), w.get_num() * (d / w.get_den()), r, d);
}

}  // namespace taulab
