#include "helpers.hpp"
#include "oracles.hpp"

#include "taulab/error.hpp"
#include "taulab/homeo.hpp"

#include <doctest.h>

using namespace th;

namespace {
Point P(const Elem& x) { return Point::in(x); }
BasicOpen L(const CutPoint& c) { return BasicOpen::left_ray(c); }
BasicOpen U(const CutPoint& c) { return BasicOpen::punctured_ray(c); }
TopDescriptor T(const CutPoint& c) { return TopDescriptor::tau_c(c); }

const CheckResult& check_named(const HomeoReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no check " + name);
}
}  // namespace

TEST_CASE("maps built from translations") {
  const HomeoMap h = homeo_from_automorphism(Automorphism::translate(1), q(0));
  CHECK(h.target == in(q(1)));
  CHECK(image_of_open(h, L(in(q(1, 2)))) == L(in(q(3, 2))));
  CHECK(image_of_open(h, U(in(q(-1)))) == U(in(q(0))));
  CHECK(image_of_open(h, L(sqrt2())) == L(CutPoint::surd(Surd(1, 1, 2, 1))));
  CHECK(preimage_of_open(h, U(in(q(0)))) == U(in(q(-1))));
  CHECK(image_of_open(h, BasicOpen::full(Qo())) == BasicOpen::full(Qo()));
  CHECK(map_point(h, Point::bottom(Qo())).is_bottom());
  const HomeoMap id = homeo_from_automorphism(Automorphism::identity(Qo()), q(3));
  CHECK(id.source == id.target);
  CHECK(verify_homeo(h, 100).passed());
}

TEST_CASE("broken maps are caught") {
  HomeoMap h = homeo_from_automorphism(Automorphism::translate(1), q(0));
  h.bottom_image = q(0);
  const HomeoReport r = verify_homeo(h, 100);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure()->name == "f(z)=z");
  CHECK_FALSE(check_named(r, "f(z)=z").witnesses.empty());

  HomeoMap fake = homeo_from_automorphism(Automorphism::identity(Qo()), sqrt2());
  fake.target = in(q(0));
  const HomeoReport rf = verify_homeo(fake, 100);
  CHECK_FALSE(check_named(rf, "trace").passed);
  CHECK(check_named(rf, "trace").witnesses.size() <= 3);

  HomeoMap off = homeo_from_automorphism(Automorphism::translate(1), q(0));
  off.target = in(q(5));
  CHECK_FALSE(check_named(verify_homeo(off, 100), "target=F(source)").passed);
}

TEST_CASE("maps from automorphisms are homeomorphisms and conjugate membership (property)") {
  for (const auto& order : all_orders()) {
    const CompletionSpec spec = complete(order);
    Rng rng(Rng::derive(61, order.to_string()));
    for (int i = 0; i < 30; ++i) {
      const Elem x1 = sample_elem(order, rng);
      const Automorphism f = automorphism_moving(order, x1, sample_elem(order, rng));
      const HomeoMap h = homeo_from_automorphism(f, x1);
      CHECK(verify_homeo(h, 200, static_cast<std::uint64_t>(i)).passed());
      const CutPoint c = sample_cut(spec, rng);
      const HomeoMap g = homeo_from_automorphism(f, c);
      for (int k = 0; k < 30; ++k) {
        const Point p = sample_point(spec, rng);
        const BasicOpen o = sample_basic_open(spec, rng);
        CHECK(oracle::member(p, o) == oracle::member(map_point(g, p), image_of_open(g, o)));
        CHECK(oracle::in_tau(o, g.source) == oracle::in_tau(image_of_open(g, o), g.target));
        CHECK(preimage_of_open(g, image_of_open(g, o)) == o);
      }
    }
  }
}

TEST_CASE("chain classes") {
  const ChainClass yes = same_chain_class(in(q(0)), in(q(5)));
  CHECK(yes.verdict == ChainClass::Verdict::Yes);
  REQUIRE(yes.map);
  CHECK(yes.map->f.kind() == Automorphism::Kind::Translate);
  CHECK(yes.map->f.translation() == 5);

  const ChainClass no = same_chain_class(sqrt2(), in(q(0)));
  CHECK(no.verdict == ChainClass::Verdict::No);
  REQUIRE(no.obstruction);
  CHECK(validate_obstruction(*no.obstruction, 1000).passed);

  CHECK(same_chain_class(top(0), top(7)).verdict == ChainClass::Verdict::Yes);
  CHECK(same_chain_class(sqrt2(), CutPoint::surd(Surd(0, 1, 3, 1))).verdict == ChainClass::Verdict::Unknown);
}

TEST_CASE("chain classes behave as an equivalence on lex(Z,Z) (property)") {
  const CompletionSpec spec = complete(LZZ());
  Rng rng(71);
  auto yes = [](const CutPoint& a, const CutPoint& b) {
    return same_chain_class(a, b).verdict == ChainClass::Verdict::Yes;
  };
  for (int i = 0; i < 300; ++i) {
    const CutPoint a = sample_cut(spec, rng);
    const CutPoint b = sample_cut(spec, rng);
    const CutPoint c = sample_cut(spec, rng);
    CHECK(yes(a, a));
    CHECK(yes(a, b) == yes(b, a));
    if (yes(a, b) && yes(b, c)) CHECK(yes(a, c));
    CHECK(yes(a, b) == (a.is_gap() == b.is_gap()));
  }
}

TEST_CASE("homeomorphisms between gaps") {
  const GapHomeo g = homeo_between_gaps(top(0), top(7), 100);
  CHECK(g.passed());
  CHECK(g.map.target == top(7));
  CHECK(homeo_between_gaps(sqrt2(), sqrt2()).map.f.kind() == Automorphism::Kind::Identity);
  const CutPoint shifted = CutPoint::surd(Surd(1, 1, 2, 1));
  const GapHomeo t = homeo_between_gaps(sqrt2(), shifted, 100);
  CHECK(t.passed());
  CHECK(t.map.f.kind() == Automorphism::Kind::Translate);
  CHECK(homeo_between_gaps(sqrt2(), CutPoint::surd(Surd(3, 5, 2, 4)), 100).passed());
  CHECK_THROWS_AS(homeo_between_gaps(sqrt2(), CutPoint::surd(Surd(0, 1, 3, 1))), Error);
  CHECK_THROWS_AS(homeo_between_gaps(sqrt2(), in(q(0))), Error);
}

TEST_CASE("chain equality and violations") {
  const FinitePerm s12 = FinitePerm::swap(q(1), q(2));
  const FinitePerm id = FinitePerm::identity(Qo());
  CHECK(chains_equal(s12, s12));
  CHECK(chains_equal(id, id));
  CHECK_FALSE(chains_equal(s12, id));
  const auto v = chain_violation(s12, id);
  REQUIRE(v);
  CHECK(v->first == q(1));
  CHECK(v->second == q(2));
  CHECK_FALSE(chain_violation(id, id).has_value());
}

TEST_CASE("incomparability witnesses") {
  const FinitePerm s12 = FinitePerm::swap(q(1), q(2));
  const FinitePerm id = FinitePerm::identity(Qo());
  const auto [o1, o2] = incomparable_witness(s12, q(5), id, q(5));
  CHECK(o1 == perm_image_open(s12, L(in(q(2)))));
  CHECK(o2 == PerturbedOpen(L(in(q(2)))));
  const auto [r1, r2] = incomparable_witness(id, q(5), s12, q(5));
  CHECK(r1 == o2);
  CHECK(r2 == o1);

  const FinitePerm s34 = FinitePerm::swap(q(3), q(4));
  const auto [w1, w2] = incomparable_witness(s12, q(0), s34, q(0));
  CHECK(w1.base().cut() == in(q(2)));
  CHECK(w2.base().cut() == in(q(4)));
  const TopDescriptor a = TopDescriptor::perm_image(s12, T(in(q(0))));
  const TopDescriptor b = TopDescriptor::perm_image(s34, T(in(q(0))));
  CHECK(in_topology(w1, a));
  CHECK_FALSE(in_topology(w1, b));
  CHECK(in_topology(w2, b));
  CHECK_FALSE(in_topology(w2, a));
  CHECK_THROWS_AS(incomparable_witness(s12, q(0), s12, q(0)), Error);
}

TEST_CASE("witnesses are valid by pointwise pullback (property)") {
  for (const auto& order : all_orders()) {
    const auto pairs = chain_pairs(order, 4);
    Rng rng(Rng::derive(83, order.to_string()));
    for (std::uint64_t m1 = 0; m1 < 16; ++m1) {
      for (std::uint64_t m2 = 0; m2 < 16; ++m2) {
        if (m1 == m2) continue;
        const FinitePerm p = pair_swap(order, pairs, m1);
        const FinitePerm q2 = pair_swap(order, pairs, m2);
        const Elem x = sample_elem(order, rng);
        const Elem y = sample_elem(order, rng);
        const auto [o1, o2] = incomparable_witness(p, x, q2, y);
        // O1 = p[B1] with B1 in tau_x, and q^-1[O1] is not a basic member of tau_y.
        const PerturbedOpen back1 = perm_image(p.inverse(), o1);
        CHECK(back1.is_pure());
        CHECK(oracle::in_tau(back1.base(), in(x)));
        const PerturbedOpen pulled1 = perm_image(q2.inverse(), o1);
        CHECK_FALSE((pulled1.is_pure() && oracle::in_tau(pulled1.base(), in(y))));
        const PerturbedOpen back2 = perm_image(q2.inverse(), o2);
        CHECK(back2.is_pure());
        CHECK(oracle::in_tau(back2.base(), in(y)));
        const PerturbedOpen pulled2 = perm_image(p.inverse(), o2);
        CHECK_FALSE((pulled2.is_pure() && oracle::in_tau(pulled2.base(), in(x))));
      }
    }
  }
}

TEST_CASE("counting chains") {
  CHECK(count_distinct_chains(0) == 1);
  CHECK(count_distinct_chains(1) == 2);
  CHECK(count_distinct_chains(8) == 256);
  CHECK(count_distinct_chains(12) == 4096);
  CHECK(count_distinct_chains(5, LZZ()) == 32);
  CHECK_THROWS_AS(count_distinct_chains(21), Error);
}

TEST_CASE("chain descriptors") {
  const FinitePerm s12 = FinitePerm::swap(q(1), q(2));
  ChainDescriptor d{s12, ChainDescriptor::Parameters::L};
  CHECK(d.member(in(q(3))) == TopDescriptor::perm_image(s12, T(in(q(3)))));
  CHECK_THROWS_AS(d.member(sqrt2()), Error);
  ChainDescriptor g{s12, ChainDescriptor::Parameters::GapClass};
  CHECK_NOTHROW(g.member(sqrt2()));
  CHECK_THROWS_AS(g.member(in(q(3))), Error);
}
