#include "helpers.hpp"

#include "taulab/error.hpp"

#include <doctest.h>

using namespace th;

TEST_CASE("element comparison") {
  CHECK(cmp(Qo(), q(1, 3), q(1, 2)) == std::strong_ordering::less);
  CHECK(cmp(LZZ(), zz(5, 0), zz(-3, 1)) == std::strong_ordering::less);
  CHECK(cmp(Zo(), z(7), z(7)) == std::strong_ordering::equal);
  CHECK_THROWS_AS(cmp(Zo(), q(1, 2), z(1)), Error);
}

TEST_CASE("elements between") {
  CHECK(*element_between(Qo(), q(0), q(1)) == q(1, 2));
  CHECK_FALSE(element_between(Zo(), z(0), z(1)).has_value());
  CHECK(*element_between(LZZ(), zz(0, 0), zz(0, 2)) == zz(0, 1));
  CHECK_THROWS_AS(element_between(Zo(), z(3), z(3)), Error);
}

TEST_CASE("automorphisms moving one element to another") {
  const Automorphism s = automorphism_moving(Zo(), z(3), z(10));
  CHECK(apply(s, z(0)) == z(7));
  const Automorphism t = automorphism_moving(Qo(), q(0), q(1));
  CHECK(apply(t, q(1, 2)) == q(3, 2));
  const Automorphism l = automorphism_moving(LZZ(), zz(2, 0), zz(5, 4));
  CHECK(apply(l, zz(7, 0)) == zz(10, 4));
  CHECK(apply(inverse(l), zz(10, 4)) == zz(7, 0));
  CHECK(apply(compose(Automorphism::translate(1), Automorphism::translate(-1)), q(5, 7)) == q(5, 7));
}

TEST_CASE("automorphisms preserve order and invert (property)") {
  for (const auto& order : all_orders()) {
    Rng rng(Rng::derive(17, order.to_string()));
    for (int i = 0; i < 100; ++i) {
      const Elem x = sample_elem(order, rng);
      const Elem y = sample_elem(order, rng);
      const Automorphism f = automorphism_moving(order, x, y);
      REQUIRE(apply(f, x) == y);
      const Automorphism g = inverse(f);
      for (int k = 0; k < 20; ++k) {
        const Elem a = sample_elem(order, rng);
        const Elem b = sample_elem(order, rng);
        CHECK(cmp(apply(f, a), apply(f, b)) == cmp(a, b));
        CHECK(apply(g, apply(f, a)) == a);
        CHECK(apply(compose(g, f), a) == a);
      }
    }
  }
}

TEST_CASE("piecewise-linear maps on Q") {
  const Automorphism f = Automorphism::piecewise_linear({Rational(0)}, {Affine{1, 0}, Affine{2, 0}});
  CHECK(apply(f, q(-3)) == q(-3));
  CHECK(apply(f, q(3)) == q(6));
  CHECK(apply(inverse(f), q(6)) == q(3));
  CHECK_THROWS_AS(Automorphism::piecewise_linear({Rational(0)}, {Affine{1, 0}, Affine{2, 1}}), Error);
}

TEST_CASE("successors exist only in discrete orders") {
  CHECK(*successor(z(4)) == z(5));
  CHECK(*predecessor(zz(0, 3)) == zz(-1, 3));
  CHECK_FALSE(successor(q(1)).has_value());
  for (const auto& order : all_orders()) {
    const Elem x = some_element(order);
    CHECK(cmp(element_below(x), x) < 0);
    CHECK(cmp(x, element_above(x)) < 0);
  }
}

TEST_CASE("order expression text") {
  CHECK(parse_order("lex(Z,Z)") == LZZ());
  CHECK(parse_order("Q") == Qo());
  CHECK(parse_order(" rev( sum(Z , Q) ) ").to_string() == "rev(sum(Z,Q))");
  try {
    parse_order("lex(Z");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_order("R"), ParseError);
  CHECK_THROWS_AS(parse_order("Q)"), ParseError);
}

TEST_CASE("element and cut literals") {
  CHECK(parse_elem(Qo(), "-3/6") == q(-1, 2));
  CHECK(parse_elem(LZZ(), "(4,-1)") == zz(4, -1));
  CHECK(parse_cut(Qo(), "surd(0,1,2,1)") == sqrt2());
  CHECK(parse_cut(LZZ(), "topOfCopy(3)") == top(3));
  CHECK(parse_cut(Zo(), "inL(5)") == in(z(5)));
  CHECK(parse_cut(Qo(), "1/3") == in(q(1, 3)));
  CHECK_THROWS_AS(parse_cut(Qo(), "topOfCopy(1)"), Error);
  CHECK_THROWS_AS(parse_elem(Zo(), "1/2"), Error);
  for (const auto& c : {sqrt2(), in(q(7, 3))}) CHECK(parse_cut(Qo(), c.to_string()) == c);
  CHECK(parse_cut(LZZ(), top(-2).to_string()) == top(-2));
}
