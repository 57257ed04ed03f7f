#include "helpers.hpp"
#include "oracles.hpp"

#include "taulab/error.hpp"

#include <doctest.h>

using namespace th;

TEST_CASE("completion specs") {
  CHECK(complete(Zo()).is_complete);
  CHECK(complete(Zo()).gap_family == GapFamily::None);
  CHECK(complete(LZZ()).gap_family == GapFamily::TopOfCopy);
  CHECK(complete(Qo()).gap_family == GapFamily::Surd);
  CHECK_THROWS_AS(complete(OrderExpr::lex(Qo(), Qo())), Error);
}

TEST_CASE("cut comparison examples") {
  CHECK(cmp_cut(sqrt2(), in(q(3, 2))) == std::strong_ordering::less);
  CHECK(cmp_cut(top(0), in(zz(-100, 1))) == std::strong_ordering::less);
  CHECK(cmp_cut(top(0), in(zz(100, 0))) == std::strong_ordering::greater);
  CHECK(cmp_cut(top(4), top(4)) == std::strong_ordering::equal);
  CHECK_FALSE(is_gap(in(q(0))));
  CHECK(is_gap(sqrt2()));
  CHECK(is_gap(top(5)));
}

TEST_CASE("cut comparison agrees with the positional oracle (property)") {
  for (const auto& order : all_orders()) {
    const CompletionSpec spec = complete(order);
    Rng rng(Rng::derive(5, order.to_string()));
    for (int i = 0; i < 1000; ++i) {
      const CutPoint a = sample_cut(spec, rng);
      const CutPoint b = i % 7 == 0 ? a : sample_cut(spec, rng);
      const auto got = cmp_cut(a, b);
      CHECK((got < 0 ? -1 : (got > 0 ? 1 : 0)) == oracle::cut_order(a, b));
    }
  }
}

TEST_CASE("minimality witnesses") {
  CHECK(witness_m1(in(q(2))).below == q(2));
  CHECK(witness_m1(top(0)).below == zz(0, 0));
  CHECK(witness_m1(top(0)).above_or_equal == zz(0, 1));
  CHECK(witness_m1(sqrt2()).below == q(1));
  CHECK(witness_m1(sqrt2()).above_or_equal == q(2));
  CHECK(witness_m2(in(q(0)), sqrt2()) == q(1));
  CHECK(witness_m2(top(0), in(zz(4, 1))) == zz(3, 1));
  CHECK(witness_m2(in(z(3)), in(z(4))) == z(3));
  CHECK_THROWS_AS(witness_m2(in(z(4)), in(z(4))), Error);
}

TEST_CASE("witnesses bracket their cuts (property)") {
  for (const auto& order : all_orders()) {
    const CompletionSpec spec = complete(order);
    Rng rng(Rng::derive(9, order.to_string()));
    for (int i = 0; i < 500; ++i) {
      const CutPoint c = sample_cut(spec, rng);
      const M1Witness w = witness_m1(c);
      CHECK(oracle::cut_order(in(w.below), c) <= 0);
      CHECK(oracle::cut_order(c, in(w.above_or_equal)) <= 0);
      const CutPoint d = sample_cut(spec, rng);
      if (oracle::cut_order(c, d) < 0) {
        const Elem x = witness_m2(c, d);
        CHECK(oracle::cut_order(c, in(x)) <= 0);
        CHECK(oracle::cut_order(in(x), d) < 0);
        if (auto y = element_strictly_between(c, d)) {
          CHECK(oracle::cut_order(c, in(*y)) < 0);
          CHECK(oracle::cut_order(in(*y), d) < 0);
        }
      }
    }
  }
}

TEST_CASE("extension of automorphisms to the completion") {
  const Automorphism shift_copies = Automorphism::lex_map(LZZ(), Automorphism::shift(1), {}, Automorphism::identity(Zo()));
  CHECK(extend_automorphism(shift_copies)(top(0)) == top(1));
  const CutPoint moved = extend_automorphism(Automorphism::translate(1))(sqrt2());
  CHECK(moved == CutPoint::surd(Surd(1, 1, 2, 1)));
  CHECK(extend_automorphism(Automorphism::identity(Qo()))(sqrt2()) == sqrt2());
  CHECK_THROWS_AS(extend_automorphism(Automorphism::identity(OrderExpr::lex(Qo(), Zo()))), Error);
}

TEST_CASE("extensions are monotone and agree with f on L (property)") {
  for (const auto& order : all_orders()) {
    const CompletionSpec spec = complete(order);
    Rng rng(Rng::derive(21, order.to_string()));
    for (int i = 0; i < 100; ++i) {
      const Automorphism f = automorphism_moving(order, sample_elem(order, rng), sample_elem(order, rng));
      const CompletionMap F = extend_automorphism(f);
      const Elem x = sample_elem(order, rng);
      CHECK(F(in(x)) == in(apply(f, x)));
      const CutPoint a = sample_cut(spec, rng);
      const CutPoint b = sample_cut(spec, rng);
      CHECK(cmp_cut(F(a), F(b)) == cmp_cut(a, b));
      CHECK(F.inverse()(F(a)) == a);
    }
  }
}

TEST_CASE("finite suprema and infima") {
  const std::vector<CutPoint> a{in(q(1)), in(q(2)), sqrt2()};
  CHECK(sup_finite(a) == in(q(2)));
  CHECK(inf_finite(a) == in(q(1)));
  CHECK(sup_finite(std::vector<CutPoint>{sqrt2()}) == sqrt2());
  CHECK(sup_finite(std::vector<CutPoint>{top(0), in(zz(5, 0))}) == top(0));
  CHECK_THROWS_AS(sup_finite(std::vector<CutPoint>{}), Error);
}

namespace {
SequenceFamily harmonic(bool up, CutPoint limit) {
  return {[up](std::size_t n) {
            return up ? in(q(static_cast<long>(n), static_cast<long>(n + 1))) : in(q(1, static_cast<long>(n + 1)));
          },
          up ? Direction::Increasing : Direction::Decreasing, std::move(limit), 1000, "harmonic"};
}
}  // namespace

TEST_CASE("sequence families are certified to their bound") {
  const SequenceReport up = verify_sequence_family(harmonic(true, in(q(1))));
  CHECK(up.passed);
  CHECK(up.status() == "certified-to-bound");
  CHECK(verify_sequence_family(harmonic(false, in(q(0)))).passed);
  const SequenceReport wrong = verify_sequence_family(harmonic(true, in(q(2))));
  CHECK_FALSE(wrong.passed);
  CHECK(wrong.failed_check == "approach");
  CHECK(wrong.status() == "failed:approach");
  const SequenceReport side = verify_sequence_family(harmonic(true, in(q(1, 2))));
  CHECK_FALSE(side.passed);
  CHECK(side.failed_check == "side");
  SequenceFamily flat{[](std::size_t) { return in(q(0)); }, Direction::Increasing, in(q(1)), 10, "flat"};
  CHECK(verify_sequence_family(flat).failed_check == "monotone");
}
