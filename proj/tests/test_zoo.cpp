#include <doctest.h>

#include "hasse/oracle.hpp"
#include "hasse/zoo.hpp"
#include "test_util.hpp"

using namespace hasse;
using test::el;

TEST_CASE("fig1a: joins collapse to top, meets to bot") {
  auto l = fixture_fig1a();
  CHECK(l->size() == 5);
  CHECK(l->join(el(*l, "1"), el(*l, "2")) == el(*l, "top"));
  CHECK(l->meet(el(*l, "1"), el(*l, "2")) == el(*l, "bot"));
  CHECK(l->name(l->top()) == "top");
  CHECK(l->name(l->bottom()) == "bot");
}

TEST_CASE("fig2: join(3,4) = 2") {
  auto l = fixture_fig2();
  CHECK(l->join(el(*l, "3"), el(*l, "4")) == el(*l, "2"));
}

TEST_CASE("fig1b: meet(1,2) = 4") {
  auto l = fixture_fig1b();
  CHECK(l->meet(el(*l, "1"), el(*l, "2")) == el(*l, "4"));
}

TEST_CASE("powerset(0) is the one-point lattice") {
  auto l = powerset(0);
  CHECK(l->size() == 1);
  CHECK(l->top() == l->bottom());
  CHECK(l->name(0) == "{}");
}

TEST_CASE("powerset(3): 8 elements and 12 cover edges") {
  auto l = powerset(3);
  CHECK(l->size() == 8);
  CHECK(oracle_hasse(*l).edge_count() == 12);
}

TEST_CASE("powerset(5) has width 10") {
  auto l = powerset(5);
  CHECK(width(*l) == 10);
  CHECK(max_antichain_exhaustive(*l) == 10);
}

TEST_CASE("reversed powerset swaps the roles of the set operations") {
  auto l = powerset(3, Orientation::reversed);
  CHECK(l->top() == 0);                   // empty set on top
  CHECK(l->bottom() == 7);                // full set at the bottom
  CHECK(l->join(3, 5) == (3 & 5));        // join = intersection
  CHECK(l->meet(3, 5) == (3 | 5));        // meet = union
  CHECK(l->leq(7, 1));                    // supersets are below
  auto h_std = oracle_hasse(*powerset(3));
  auto h_rev = oracle_hasse(*l);
  CHECK(h_std.edge_count() == h_rev.edge_count());
}

TEST_CASE("divisor(12): 6 divisors, 7 cover edges") {
  // Divisors {1,2,3,4,6,12}; covers 1-2, 1-3, 2-4, 2-6, 3-6, 4-12, 6-12.
  auto l = divisor(12);
  CHECK(l->size() == 6);
  CHECK(oracle_hasse(*l).edge_count() == 7);
  CHECK(l->join(el(*l, "4"), el(*l, "6")) == el(*l, "12"));
  CHECK(l->meet(el(*l, "4"), el(*l, "6")) == el(*l, "2"));
}

TEST_CASE("divisor(1) is the one-point lattice") {
  auto l = divisor(1);
  CHECK(l->size() == 1);
  CHECK(l->top() == l->bottom());
}

TEST_CASE("partition(3): Bell(3) = 5 elements, 6 cover edges") {
  auto l = partition(3);
  CHECK(l->size() == 5);
  CHECK(oracle_hasse(*l).edge_count() == 6);
  CHECK(l->name(l->top()) == "123");
  CHECK(l->name(l->bottom()) == "1/2/3");
}

TEST_CASE("partition joins coarsen and meets refine") {
  auto l = partition(4);
  CHECK(l->size() == 15);  // Bell(4)
  Element a = el(*l, "12/3/4");
  Element b = el(*l, "1/2/34");
  CHECK(l->name(l->join(a, b)) == "12/34");
  CHECK(l->meet(a, b) == l->bottom());
  Element c = el(*l, "123/4");
  CHECK(l->name(l->meet(c, el(*l, "12/34"))) == "12/3/4");
  CHECK(l->join(c, b) == l->top());
}

TEST_CASE("generator parameter caps") {
  CHECK_THROWS_AS(powerset(21), ParameterTooLarge);
  CHECK_THROWS_AS(divisor(1'000'001), ParameterTooLarge);
  CHECK_THROWS_AS(partition(7), ParameterTooLarge);
}

TEST_CASE("small zoo lattices pass the exhaustive axiom suite") {
  std::vector<std::shared_ptr<const Lattice>> small = {
      fixture_fig1a(), fixture_fig1b(), fixture_fig2(),
      powerset(0),     powerset(3),     powerset(5),
      powerset(4, Orientation::reversed), divisor(12), divisor(360),
      partition(0),    partition(3),    partition(4),
  };
  for (const auto& l : small) {
    REQUIRE(l->size() <= 64);
    ValidationReport report = check_lattice_axioms(*l);
    INFO(report.summary());
    CHECK(report.ok());
  }
}

TEST_CASE("larger zoo lattices pass the sampled axiom suite") {
  std::vector<std::shared_ptr<const Lattice>> large = {
      powerset(7), divisor(720720), partition(6),
  };
  for (const auto& l : large) {
    ValidationReport report = check_lattice_axioms_sampled(*l, 10'000, 7);
    INFO(report.summary());
    CHECK(report.ok());
  }
}

TEST_CASE("distributivity across the zoo") {
  CHECK(is_distributive(*powerset(4)).distributive);
  CHECK(is_distributive(*powerset(4, Orientation::reversed)).distributive);
  CHECK(is_distributive(*divisor(30)).distributive);    // squarefree
  CHECK(is_distributive(*divisor(2310)).distributive);  // squarefree
  CHECK(is_distributive(*divisor(360)).distributive);   // prime powers still distribute
  CHECK_FALSE(is_distributive(*fixture_fig1a()).distributive);
  CHECK_FALSE(is_distributive(*partition(3)).distributive);  // M3 again
}
