#include "oracles.hpp"

#include "taulab/error.hpp"
#include "taulab/numeric.hpp"
#include "taulab/sampling.hpp"
#include "taulab/surd.hpp"

#include <doctest.h>

using namespace taulab;

TEST_CASE("rationals are stored in lowest terms") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(sign(make_rational(-1, 3)) == -1);
}

TEST_CASE("floor and ceiling on signed rationals") {
  CHECK(floor_of(make_rational(-7, 2)) == -4);
  CHECK(ceil_of(make_rational(-7, 2)) == -3);
  CHECK(floor_div(Integer(7), Integer(-2)) == -4);
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational x = make_rational(rng.uniform(-1000, 1000), rng.uniform(1, 50));
    const Integer f = floor_of(x);
    CHECK(Rational(f) <= x);
    CHECK(x < Rational(f + 1));
  }
}

TEST_CASE("integer square root") {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Integer x = rng.uniform(0, 1'000'000'000);
    const Integer k = isqrt(x);
    CHECK(k * k <= x);
    CHECK((k + 1) * (k + 1) > x);
    CHECK(is_perfect_square(x * x));
  }
  CHECK_FALSE(is_perfect_square(Integer(2)));
}

TEST_CASE("surds are normalised so equal values have equal fields") {
  CHECK(Surd(0, 1, 8, 1) == Surd(0, 2, 2, 1));
  CHECK(Surd(2, 4, 2, 2) == Surd(1, 2, 2, 1));
  CHECK(Surd(1, 1, 2, -1) == Surd(-1, -1, 2, 1));
  CHECK_THROWS_AS(Surd(0, 1, 4, 1), Error);
  CHECK_THROWS_AS(Surd(0, 0, 2, 1), Error);
}

TEST_CASE("sqrt 2 against 3/2") {
  CHECK(compare(Surd(0, 1, 2, 1), make_rational(3, 2)) == std::strong_ordering::less);
  CHECK(compare(Surd(0, -1, 2, 1), make_rational(-3, 2)) == std::strong_ordering::greater);
}

TEST_CASE("surd comparison agrees with high-precision evaluation") {
  Rng rng(2024);
  const int radicands[] = {2, 3, 5, 6, 7, 8, 12, 18, 50};
  auto random_surd = [&] {
    return Surd(rng.uniform(-30, 30), rng.uniform(1, 6) * (rng.chance(1, 2) ? 1 : -1),
                radicands[rng.uniform(0, 8)], rng.uniform(1, 9));
  };
  for (int i = 0; i < 2000; ++i) {
    const Surd a = random_surd();
    const Surd b = random_surd();
    const Rational x = make_rational(rng.uniform(-200, 200), rng.uniform(1, 20));
    const auto ab = compare(a, b);
    const int expect_ab = oracle::surd_vs_surd(a, b);
    CHECK((ab < 0 ? -1 : (ab > 0 ? 1 : 0)) == expect_ab);
    const auto ax = compare(a, x);
    CHECK((ax < 0 ? -1 : 1) == oracle::surd_vs_rational(a, x));
  }
}

TEST_CASE("sign of two-surd expressions") {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Integer a = rng.uniform(-50, 50), b = rng.uniform(-9, 9), c = rng.uniform(-9, 9);
    const Integer m = 2, n = 3;
    mpf_class rm(0, 2048), rn(0, 2048);
    mpf_sqrt_ui(rm.get_mpf_t(), 2);
    mpf_sqrt_ui(rn.get_mpf_t(), 3);
    const mpf_class v(mpf_class(a, 2048) + mpf_class(b, 2048) * rm + mpf_class(c, 2048) * rn, 2048);
    CHECK(sign_of(a, b, m, c, n) == oracle::sgn(v));
  }
}

TEST_CASE("dyadic brackets and surds between rationals") {
  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const Surd s(rng.uniform(-20, 20), rng.uniform(1, 5), 7, rng.uniform(1, 5));
    const unsigned bits = static_cast<unsigned>(rng.uniform(0, 40));
    const Rational lo = s.lower_dyadic(bits);
    const Rational hi = s.upper_dyadic(bits);
    CHECK(compare(s, lo) == std::strong_ordering::greater);
    CHECK(compare(s, hi) == std::strong_ordering::less);
    CHECK(hi - lo <= make_rational(Integer(1), Integer(1) << bits));

    const Rational a = make_rational(rng.uniform(-100, 100), rng.uniform(1, 10));
    const Rational b = a + make_rational(rng.uniform(1, 100), rng.uniform(1, 10));
    const Surd m = surd_between(a, b, 3);
    CHECK(oracle::surd_vs_rational(m, a) == 1);
    CHECK(oracle::surd_vs_rational(m, b) == -1);
  }
}

TEST_CASE("affine images of surds") {
  const Surd s(0, 1, 2, 1);
  const Surd t = s.affine(make_rational(3, 2), make_rational(-1, 4));
  mpf_class expect(mpf_class(make_rational(3, 2), 2048) * oracle::surd_value(s) - mpf_class(make_rational(1, 4), 2048),
                   2048);
  CHECK(abs(oracle::surd_value(t) - expect) < 1e-100);
  CHECK((s + Rational(1)).to_string() == "surd(1,1,2,1)");
}
