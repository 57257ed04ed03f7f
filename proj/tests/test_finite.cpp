#include "oracles.hpp"

#include "taulab/error.hpp"
#include "taulab/finite.hpp"
#include "taulab/sampling.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace taulab;

TEST_CASE("enumeration matches brute-force closure checking") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::uint32_t> mine;
    for (const auto& t : enumerate_topologies(n)) mine.push_back(t.opens);
    const auto expected = oracle::all_topologies_by_closure(n);
    CHECK(mine == expected);
  }
  CHECK(enumerate_topologies(1).size() == 1);
  CHECK(enumerate_topologies(3).size() == 29);
  CHECK(enumerate_topologies(4).size() == 355);
}

TEST_CASE("n = 5 is enumerated, larger sizes are refused") {
  const auto tops = enumerate_topologies(5);
  CHECK(tops.size() == 6942);
  CHECK(std::all_of(tops.begin(), tops.end(), [](const FiniteTop& t) { return is_topology(5, t.opens); }));
  CHECK_THROWS_AS(enumerate_topologies(6), Error);
  CHECK_THROWS_AS(enumerate_topologies(0), Error);
}

TEST_CASE("homeomorphism classes match Burnside counts") {
  const std::size_t expected[] = {1, 3, 9, 33};
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto tops = oracle::all_topologies_by_closure(n);
    CHECK(oracle::burnside_orbits(n, tops) == expected[n - 1]);
    CHECK(homeo_classes(n).size() == expected[n - 1]);
  }
  CHECK(homeo_classes(5).size() == 139);
}

TEST_CASE("classes are orbits with a least representative") {
  const auto tops = enumerate_topologies(3);
  for (const auto& cls : homeo_classes(3)) {
    const Family rep = canonical_form(3, tops[cls.front()].opens);
    for (std::size_t i : cls) CHECK(canonical_form(3, tops[i].opens) == rep);
  }
}

TEST_CASE("lattice operations (property)") {
  Rng rng(101);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto tops = enumerate_topologies(n);
    for (int i = 0; i < 200; ++i) {
      const Family a = tops[rng.uniform(0, tops.size() - 1)].opens;
      const Family b = tops[rng.uniform(0, tops.size() - 1)].opens;
      CHECK(is_topology(n, finite_meet(a, b)));
      const Family j = finite_join(n, a, b);
      CHECK(is_topology(n, j));
      CHECK((a & ~j) == 0);
      CHECK((b & ~j) == 0);
      // Least among all topologies above both.
      for (const auto& t : tops) {
        if ((a & ~t.opens) == 0 && (b & ~t.opens) == 0) CHECK((j & ~t.opens) == 0);
      }
    }
  }
}

TEST_CASE("enumeration order does not depend on anything but the set") {
  auto tops = enumerate_topologies(3);
  Rng rng(7);
  for (std::size_t i = tops.size(); i > 1; --i) std::swap(tops[i - 1], tops[rng.uniform(0, i - 1)]);
  std::set<Family> shuffled;
  for (const auto& t : tops) shuffled.insert(t.opens);
  CHECK(shuffled.size() == 29);
}

TEST_CASE("condensation preorder") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const CondensationRelation rel = condensation_preorder(n);
    const std::size_t m = rel.tops.size();
    const auto disc = std::find(rel.tops.begin(), rel.tops.end(), FiniteTop{n, discrete(n)}) - rel.tops.begin();
    const auto anti = std::find(rel.tops.begin(), rel.tops.end(), FiniteTop{n, antidiscrete(n)}) - rel.tops.begin();
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(rel.leq[i][i]);
      CHECK(rel.leq[i][disc]);
      CHECK(rel.leq[anti][i]);
      for (std::size_t j = 0; j < m; ++j) {
        if (!rel.leq[i][j]) continue;
        for (std::size_t k = 0; k < m; ++k) {
          if (rel.leq[j][k]) CHECK(rel.leq[i][k]);
        }
      }
    }
    CHECK(rel.bijective_classes == rel.homeo_classes);
  }
  CHECK_THROWS_AS(condensation_preorder(5), Error);
}

TEST_CASE("reversibility census") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const ReversibilityCensus c = reversibility_census(n);
    const auto tops = enumerate_topologies(n);
    CHECK(c.reversible.size() == tops.size());
    REQUIRE(c.strongly_reversible.size() == 2);
    std::set<Family> strong;
    for (std::size_t i : c.strongly_reversible) strong.insert(tops[i].opens);
    CHECK(strong == std::set<Family>{discrete(n), antidiscrete(n)});
  }
}

TEST_CASE("maximal chains inside a class") {
  const auto tops2 = enumerate_topologies(2);
  auto index_of = [&](Family f) {
    return static_cast<std::size_t>(std::find(tops2.begin(), tops2.end(), FiniteTop{2, f}) - tops2.begin());
  };
  CHECK(maximal_chains_in_class(2, index_of(discrete(2))) == std::vector<std::size_t>{1});
  CHECK(maximal_chains_in_class(2, index_of(antidiscrete(2))) == std::vector<std::size_t>{1});
  // Sierpinski: {}, {0}, {0,1}.
  const Family sierpinski = (1u << 0) | (1u << 1) | (1u << 3);
  CHECK(maximal_chains_in_class(2, index_of(sierpinski)) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("report rows") {
  const FiniteReportRow r4 = finite_report_row(4);
  CHECK(r4.topology_count == 355);
  CHECK(r4.homeo_class_count == 33);
  CHECK(*r4.strongly_reversible_count == 2);
  CHECK(*r4.condensation_classes_equal_homeo_classes);
  CHECK(*r4.all_reversible);
  const FiniteReportRow r5 = finite_report_row(5);
  CHECK(r5.topology_count == 6942);
  CHECK_FALSE(r5.strongly_reversible_count.has_value());
}
