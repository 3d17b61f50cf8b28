#include <doctest.h>

#include "hasse/embedding.hpp"
#include "hasse/oracle.hpp"
#include "hasse/zoo.hpp"
#include "test_util.hpp"

using namespace hasse;
using test::el;
using test::named_edges;

namespace {
using EdgeSet = std::set<std::pair<std::string, std::string>>;
}

TEST_CASE("oracle_hasse reduces fig1b to its seven cover edges") {
  auto l = fixture_fig1b();
  EdgeSet expected = {{"1", "top"}, {"2", "top"}, {"3", "top"}, {"4", "1"},
                      {"4", "2"},   {"bot", "4"}, {"bot", "3"}};
  CHECK(named_edges(oracle_hasse(*l), *l) == expected);
}

TEST_CASE("oracle_hasse reduces fig2 to its seven cover edges") {
  auto l = fixture_fig2();
  EdgeSet expected = {{"1", "top"}, {"2", "top"}, {"4", "1"}, {"4", "2"},
                      {"3", "2"},   {"bot", "4"}, {"bot", "3"}};
  CHECK(named_edges(oracle_hasse(*l), *l) == expected);
}

TEST_CASE("oracle_hasse on a chain gives n-1 edges") {
  for (std::size_t n : {1, 2, 5, 9}) {
    auto l = test::chain(n);
    CHECK(oracle_hasse(*l).edge_count() == n - 1);
  }
}

TEST_CASE("oracle_hasse is idempotent ground truth") {
  auto l = fixture_fig2();
  Diagram first = oracle_hasse(*l);
  Diagram second = oracle_hasse(*l);
  CHECK(first == second);

  // Reachability along the edges reproduces the strict order.
  auto reaches = [&first](Element from, Element to) {
    std::vector<Element> stack{from};
    std::set<Element> seen;
    while (!stack.empty()) {
      Element at = stack.back();
      stack.pop_back();
      if (at == to) return true;
      if (!seen.insert(at).second) continue;
      for (Element up : first.upper_covers(at)) stack.push_back(up);
    }
    return false;
  };
  for (Element x = 0; x < l->size(); ++x) {
    for (Element y = 0; y < l->size(); ++y) {
      if (x == y) continue;
      CHECK(reaches(x, y) == l->lt(x, y));
    }
  }
}

TEST_CASE("per-element covers match the diagram projections") {
  auto fig1a = fixture_fig1a();
  CHECK(test::names_of(*fig1a, upper_cover(*fig1a, el(*fig1a, "bot"))) ==
        std::vector<std::string>{"1", "2", "3"});
  CHECK(upper_cover(*fig1a, fig1a->top()).empty());

  auto fig2 = fixture_fig2();
  CHECK(test::names_of(*fig2, lower_cover(*fig2, el(*fig2, "2"))) ==
        std::vector<std::string>{"3", "4"});

  for (const auto& l : {fig1a, fig2}) {
    Diagram h = oracle_hasse(*l);
    for (Element x = 0; x < l->size(); ++x) {
      CHECK(test::names_of(*l, upper_cover(*l, x)) == test::names_of(*l, h.upper_covers(x)));
      CHECK(test::names_of(*l, lower_cover(*l, x)) == test::names_of(*l, h.lower_covers(x)));
    }
  }
}

TEST_CASE("width via matching matches the exhaustive antichain search") {
  CHECK(width(*fixture_fig1a()) == 3);
  CHECK(width(*test::chain(6)) == 1);
  CHECK(width(*powerset(5)) == 10);

  std::vector<std::shared_ptr<const Lattice>> small = {
      fixture_fig1a(), fixture_fig1b(), fixture_fig2(), powerset(4),
      divisor(60),     partition(4),    test::chain(7),
  };
  for (const auto& l : small) {
    REQUIRE(l->size() <= 20);
    CHECK(width(*l) == max_antichain_exhaustive(*l));
  }
}

TEST_CASE("distributivity witness is a genuine violation") {
  auto l = fixture_fig1a();
  DistributivityResult result = is_distributive(*l);
  REQUIRE_FALSE(result.distributive);
  CHECK(l->meet(result.x, l->join(result.y, result.z)) !=
        l->join(l->meet(result.x, result.y), l->meet(result.x, result.z)));
  CHECK(is_distributive(*fixture_fig2()).distributive);
}

TEST_CASE("check_paper_laws passes on the fixtures with the label embedding") {
  auto fig1a = fixture_fig1a();
  Embedding label = embedding_by_name(*fig1a, fixture_fig1b());
  ValidationReport report = check_paper_laws(*fig1a, &label);
  INFO(report.summary());
  CHECK(report.ok());
}

TEST_CASE("check_paper_laws is vacuous on the one-point lattice") {
  auto l = test::chain(1);
  CHECK(check_paper_laws(*l).ok());
}

namespace {

// fig1a with one corrupted join: join(1,2) answers 1 instead of top.
class CorruptedJoin final : public Lattice {
 public:
  CorruptedJoin() : base_(fixture_fig1a()) {}
  std::size_t size() const override { return base_->size(); }
  Element top() const override { return base_->top(); }
  Element bottom() const override { return base_->bottom(); }
  bool leq(Element x, Element y) const override { return base_->leq(x, y); }
  Element meet(Element x, Element y) const override { return base_->meet(x, y); }
  std::string name(Element x) const override { return base_->name(x); }
  Element join(Element x, Element y) const override {
    Element one = *base_->find("1");
    Element two = *base_->find("2");
    if ((x == one && y == two) || (x == two && y == one)) return one;
    return base_->join(x, y);
  }

 private:
  std::shared_ptr<ExplicitLattice> base_;
};

}  // namespace

TEST_CASE("check_paper_laws catches a corrupted join table") {
  CorruptedJoin bad;
  ValidationReport report = check_paper_laws(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.failures[0].law == "two-lower-covers-join");
  CHECK_FALSE(report.failures[0].witness.empty());
}

TEST_CASE("meet_irreducibles of the fixtures") {
  auto fig1a = fixture_fig1a();
  CHECK(test::names_of(*fig1a, meet_irreducibles(*fig1a, oracle_hasse(*fig1a))) ==
        std::vector<std::string>{"1", "2", "3"});
  auto fig2 = fixture_fig2();
  CHECK(test::names_of(*fig2, meet_irreducibles(*fig2, oracle_hasse(*fig2))) ==
        std::vector<std::string>{"1", "2", "3"});
}
