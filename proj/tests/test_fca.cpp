#include <doctest.h>

#include <random>
#include <set>

#include "hasse/algorithms.hpp"
#include "hasse/fca.hpp"
#include "hasse/oracle.hpp"
#include "hasse/traversal.hpp"
#include "hasse/zoo.hpp"
#include "test_util.hpp"

using namespace hasse;

namespace {

// rows {a,b}, {b,c}, {b}: the running three-object context.
FormalContext abc_context() {
  FormalContext ctx;
  ctx.objects = {"1", "2", "3"};
  ctx.attributes = {"a", "b", "c"};
  ctx.rows = {0b011, 0b110, 0b010};
  return ctx;
}

// Contranominal scale: object i has every attribute except the i-th, so
// every subset is closed.
FormalContext contranominal(std::size_t k) {
  FormalContext ctx;
  for (std::size_t i = 0; i < k; ++i) {
    ctx.objects.push_back(std::to_string(i + 1));
    ctx.attributes.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  for (std::size_t i = 0; i < k; ++i) {
    ctx.rows.push_back(ctx.universe() & ~(AttrMask{1} << i));
  }
  return ctx;
}

// Oracle: the set of closures of all attribute subsets, enumerated by brute
// force. Independent of NextClosure.
std::set<AttrMask> brute_intents(const FormalContext& ctx) {
  std::set<AttrMask> out;
  const AttrMask universe = ctx.universe();
  for (AttrMask a = 0;; ++a) {
    out.insert(closure(ctx, a));
    if (a == universe) break;
  }
  return out;
}

FormalContext random_context(std::size_t objects, std::size_t attributes, double density,
                             std::mt19937_64& rng) {
  FormalContext ctx;
  ctx.attributes = default_attribute_names(static_cast<unsigned>(attributes));
  std::bernoulli_distribution flip(density);
  for (std::size_t o = 0; o < objects; ++o) {
    ctx.objects.push_back(std::to_string(o + 1));
    AttrMask mask = 0;
    for (std::size_t a = 0; a < attributes; ++a) {
      if (flip(rng)) mask |= AttrMask{1} << a;
    }
    ctx.rows.push_back(mask);
  }
  return ctx;
}

}  // namespace

TEST_CASE("closure is extensive, monotone and idempotent") {
  FormalContext ctx = abc_context();
  for (AttrMask a = 0; a <= ctx.universe(); ++a) {
    AttrMask c = closure(ctx, a);
    CHECK((a & c) == a);          // extensive
    CHECK(closure(ctx, c) == c);  // idempotent
    for (AttrMask b = 0; b <= ctx.universe(); ++b) {
      if ((b & a) == a) CHECK((closure(ctx, b) & c) == c);  // monotone on supersets
    }
  }
}

TEST_CASE("closure({a}) = {a,b} on the running context") {
  FormalContext ctx = abc_context();
  std::vector<std::string> a{"a"};
  CHECK(closure(ctx, a) == 0b011);
}

TEST_CASE("closure over an empty context is the full attribute set") {
  FormalContext ctx;
  ctx.attributes = {"a", "b"};
  CHECK(closure(ctx, AttrMask{0}) == ctx.universe());
  CHECK(closure(ctx, AttrMask{0b01}) == ctx.universe());
}

TEST_CASE("closure rejects unknown attributes") {
  FormalContext ctx = abc_context();
  CHECK_THROWS_AS(closure(ctx, AttrMask{0b1000}), UnknownAttribute);
  std::vector<std::string> bad{"z"};
  CHECK_THROWS_AS(closure(ctx, bad), UnknownAttribute);
}

TEST_CASE("enumerate_intents matches the brute-force closure family") {
  FormalContext ctx = abc_context();
  std::vector<AttrMask> intents = enumerate_intents(ctx);
  std::set<AttrMask> expected = brute_intents(ctx);
  CHECK(std::set<AttrMask>(intents.begin(), intents.end()) == expected);
  CHECK(intents.size() == expected.size());  // no duplicates
  for (std::size_t i = 1; i < intents.size(); ++i) {
    CHECK(lectic_less(intents[i - 1], intents[i]));  // ascending lectic order
  }
}

TEST_CASE("the contranominal scale closes every subset") {
  FormalContext ctx = contranominal(3);
  std::vector<AttrMask> intents = enumerate_intents(ctx);
  CHECK(intents.size() == 8);
  CHECK(std::set<AttrMask>(intents.begin(), intents.end()) == brute_intents(ctx));
}

TEST_CASE("a zero-attribute context has exactly the empty intent") {
  FormalContext ctx;
  ctx.objects = {"1", "2"};
  ctx.rows = {0, 0};
  std::vector<AttrMask> intents = enumerate_intents(ctx);
  REQUIRE(intents.size() == 1);
  CHECK(intents[0] == 0);
}

TEST_CASE("enumerate_intents rejects wide attribute universes") {
  FormalContext ctx;
  for (int i = 0; i < 31; ++i) {
    ctx.attributes.push_back("a" + std::to_string(i));
  }
  CHECK_THROWS_AS(enumerate_intents(ctx), ParameterTooLarge);
}

TEST_CASE("the concept lattice of the running context is the four-element diamond") {
  auto cl = ConceptLattice::build(abc_context());
  REQUIRE(cl->size() == 4);
  CHECK(cl->intent(cl->top()) == 0b010);           // closure of {} = {b}
  CHECK(cl->intent(cl->bottom()) == 0b111);        // full set
  CHECK(check_lattice_axioms(*cl).ok());

  Element ab = cl->index_of(0b011);
  Element bc = cl->index_of(0b110);
  CHECK(cl->join(ab, bc) == cl->top());            // intersection {b}
  CHECK(cl->meet(ab, bc) == cl->bottom());         // closure of the union
  CHECK(cl->name(ab) == "{a,b}");
}

TEST_CASE("the strict 3x3 diagonal context yields the five-element diamond") {
  FormalContext ctx;
  ctx.objects = {"1", "2", "3"};
  ctx.attributes = {"a", "b", "c"};
  ctx.rows = {0b001, 0b010, 0b100};
  auto cl = ConceptLattice::build(ctx);
  CHECK(cl->size() == 5);
  CHECK(oracle_hasse(*cl).edge_count() == 6);  // isomorphic to the M3 fixture
  CHECK_FALSE(is_distributive(*cl).distributive);
}

TEST_CASE("concept lattices of random contexts pass the axiom suite") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    FormalContext ctx = random_context(1 + trial, 1 + trial % 6, 0.5, rng);
    auto cl = ConceptLattice::build(ctx);
    if (cl->size() <= 64) {
      ValidationReport report = check_lattice_axioms(*cl);
      INFO(report.summary());
      CHECK(report.ok());
    }
  }
}

TEST_CASE("powerset_intent_embedding maps top to the empty set") {
  auto cl = ConceptLattice::build(abc_context());
  Embedding f = powerset_intent_embedding(*cl);
  CHECK(f.codomain().name(f(cl->top())) == "{b}");  // the intent itself
  CHECK(f(cl->top()) == static_cast<Element>(cl->intent(cl->top())));
  // Top of the codomain is the empty attribute set.
  CHECK(f.codomain().name(f.codomain().top()) == "{}");

  // Join preservation on all pairs: f(x v y) = f(x) n f(y).
  for (Element x = 0; x < cl->size(); ++x) {
    for (Element y = 0; y < cl->size(); ++y) {
      CHECK(f(cl->join(x, y)) == f.codomain().join(f(x), f(y)));
    }
  }
  ValidationReport report = validate_embedding(f, *cl);
  INFO(report.summary());
  CHECK(report.ok());
}

TEST_CASE("ipred with the intent embedding matches the oracle on random contexts") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<std::size_t> objs(1, 12), attrs(1, 8);
    FormalContext ctx = random_context(objs(rng), attrs(rng), 0.4 + 0.02 * trial, rng);
    auto cl = ConceptLattice::build(ctx);
    Embedding f = powerset_intent_embedding(*cl);
    REQUIRE(validate_embedding(f, *cl).ok());
    Diagram truth = oracle_hasse(*cl);
    IpredRunOptions opt;
    opt.unchecked = true;
    CHECK(generalized_ipred(*cl, reverse_topo_sort(*cl), f, nullptr, opt) == truth);
    CHECK(generalized_border(*cl, reverse_topo_sort(*cl)) == truth);
  }
}
