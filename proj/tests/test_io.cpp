#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hasse/io.hpp"
#include "hasse/oracle.hpp"
#include "hasse/traversal.hpp"
#include "hasse/zoo.hpp"
#include "test_util.hpp"

using namespace hasse;
using test::el;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const std::string kGolden = HASSE_GOLDEN_DIR;

}  // namespace

TEST_CASE("parse_lattice_json round-trips the canonical fig2 document") {
  const std::string golden = slurp(kGolden + "/fig2.json");
  auto parsed = parse_lattice_json(golden);
  auto expected = fixture_fig2();
  REQUIRE(parsed->size() == expected->size());
  for (Element x = 0; x < parsed->size(); ++x) {
    CHECK(parsed->name(x) == expected->name(x));
    for (Element y = 0; y < parsed->size(); ++y) {
      CHECK(parsed->leq(x, y) == expected->leq(x, y));
    }
  }
  CHECK(emit_lattice_json(*parsed) == golden);
  CHECK(emit_lattice_json(*expected) == golden);
}

TEST_CASE("lattice json survives parse(emit(.)) across the zoo") {
  std::vector<std::shared_ptr<const Lattice>> zoo = {
      fixture_fig1a(), fixture_fig1b(), powerset(3), divisor(12), partition(3), test::chain(1),
  };
  for (const auto& l : zoo) {
    std::string text = emit_lattice_json(*l);
    auto parsed = parse_lattice_json(text);
    REQUIRE(parsed->size() == l->size());
    for (Element x = 0; x < l->size(); ++x) {
      CHECK(parsed->name(x) == l->name(x));
      for (Element y = 0; y < l->size(); ++y) {
        CHECK(parsed->leq(x, y) == l->leq(x, y));
      }
    }
    CHECK(emit_lattice_json(*parsed) == text);
  }
}

TEST_CASE("leq-kind documents load like their cover closures") {
  const std::string text = R"({
  "elements": ["a", "b", "c"],
  "order": "leq",
  "pairs": [["a", "b"], ["b", "c"], ["a", "c"]]
})";
  auto l = parse_lattice_json(text);
  CHECK(l->size() == 3);
  CHECK(l->leq(el(*l, "a"), el(*l, "c")));
  CHECK(l->name(l->top()) == "c");
}

TEST_CASE("single-element document parses") {
  auto l = parse_lattice_json(R"({"elements":["x"],"order":"covers","pairs":[]})");
  CHECK(l->size() == 1);
  CHECK(l->top() == l->bottom());
}

TEST_CASE("the bowtie document fails validation naming the pair") {
  const std::string text = R"({
  "elements": ["a", "b", "c", "d"],
  "order": "covers",
  "pairs": [["a","c"], ["a","d"], ["b","c"], ["b","d"]]
})";
  try {
    parse_lattice_json(text);
    FAIL("expected LatticeValidationError");
  } catch (const LatticeValidationError& e) {
    REQUIRE_FALSE(e.report.ok());
    CHECK(e.report.failures[0].witness == std::vector<std::string>{"a", "b"});
  }
}

TEST_CASE("malformed lattice documents raise SyntaxError") {
  CHECK_THROWS_AS(parse_lattice_json("{"), SyntaxError);
  CHECK_THROWS_AS(parse_lattice_json(R"({"elements":1,"order":"covers","pairs":[]})"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_lattice_json(R"({"elements":["x"],"order":"up","pairs":[]})"),
                  SyntaxError);
  CHECK_THROWS_AS(
      parse_lattice_json(R"({"elements":["x"],"order":"covers","pairs":[["x","y"]]})"),
      SyntaxError);
  CHECK_THROWS_AS(
      parse_lattice_json(R"({"elements":["x","x"],"order":"covers","pairs":[]})"),
      SyntaxError);
  CHECK_THROWS_AS(
      parse_lattice_json(R"({"elements":["x"],"order":"covers","pairs":[],"zap":1})"),
      SyntaxError);
}

TEST_CASE("CXT golden file round-trips byte for byte") {
  const std::string golden = slurp(kGolden + "/context3.cxt");
  FormalContext ctx = parse_cxt(golden);
  CHECK(ctx.objects == std::vector<std::string>{"1", "2", "3"});
  CHECK(ctx.attributes == std::vector<std::string>{"a", "b", "c"});
  CHECK(ctx.rows == std::vector<AttrMask>{0b011, 0b110, 0b010});
  CHECK(emit_cxt(ctx) == golden);
}

TEST_CASE("CXT parser reports malformed inputs") {
  CHECK_THROWS_AS(parse_cxt("A\n\n1\n1\n\no\na\nX\n"), SyntaxError);        // bad header
  CHECK_THROWS_AS(parse_cxt("B\n\n2\n1\n\no1\no2\na\nX\n"), SyntaxError);   // missing row
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n2\n\no\na\nb\nX\n"), SyntaxError);     // short row
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\no\na\nY\n"), SyntaxError);        // bad char
  CHECK_THROWS_AS(parse_cxt("B\n\n2\n1\n\no\no\na\nX\nX\n"), SyntaxError);  // dup object
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\no\na\nX\nextra\n"), SyntaxError); // trailing
}

TEST_CASE("a diagonal-free CXT yields the reversed powerset concept lattice") {
  // Contranominal scale: '.' on the diagonal, 'X' elsewhere.
  const std::string text = "B\n\n3\n3\n\n1\n2\n3\na\nb\nc\n.XX\nX.X\nXX.\n";
  FormalContext ctx = parse_cxt(text);
  auto cl = ConceptLattice::build(ctx);
  REQUIRE(cl->size() == 8);
  auto rev = powerset(3, Orientation::reversed);
  // Intent masks are exactly the powerset elements; orders agree.
  for (Element x = 0; x < 8; ++x) {
    for (Element y = 0; y < 8; ++y) {
      Element px = static_cast<Element>(cl->intent(x));
      Element py = static_cast<Element>(cl->intent(y));
      CHECK(cl->leq(x, y) == rev->leq(px, py));
    }
  }
  CHECK(oracle_hasse(*cl).edge_count() == 12);
}

TEST_CASE("transactions text loads with sorted item universe") {
  FormalContext ctx = parse_transactions("a b\nb c\nb\n");
  CHECK(ctx.objects == std::vector<std::string>{"1", "2", "3"});
  CHECK(ctx.attributes == std::vector<std::string>{"a", "b", "c"});
  std::vector<std::string> a{"a"};
  CHECK(closure(ctx, a) == 0b011);  // {a,b}
}

TEST_CASE("an empty transactions file gives the one-concept lattice") {
  FormalContext ctx = parse_transactions("");
  CHECK(ctx.objects.empty());
  CHECK(ctx.attributes.empty());
  auto cl = ConceptLattice::build(ctx);
  CHECK(cl->size() == 1);
}

TEST_CASE("emit_dot lists edges in lexicographic order") {
  auto l = fixture_fig1a();
  std::string dot = emit_dot(oracle_hasse(*l), *l);
  CHECK(dot ==
        "digraph hasse {\n"
        "\"1\" -> \"top\";\n"
        "\"2\" -> \"top\";\n"
        "\"3\" -> \"top\";\n"
        "\"bot\" -> \"1\";\n"
        "\"bot\" -> \"2\";\n"
        "\"bot\" -> \"3\";\n"
        "}\n");
}

TEST_CASE("emit_dot of an empty diagram is the bare digraph") {
  auto l = test::chain(1);
  CHECK(emit_dot(oracle_hasse(*l), *l) == "digraph hasse {\n}\n");
}

TEST_CASE("emit_edges_json matches the six-edge array") {
  auto l = fixture_fig1a();
  CHECK(emit_edges_json(oracle_hasse(*l), *l) ==
        "[\n"
        "  [\"1\", \"top\"],\n"
        "  [\"2\", \"top\"],\n"
        "  [\"3\", \"top\"],\n"
        "  [\"bot\", \"1\"],\n"
        "  [\"bot\", \"2\"],\n"
        "  [\"bot\", \"3\"]\n"
        "]\n");
}

TEST_CASE("emit_stats shape and invariants on a real run") {
  auto l = powerset(4);
  OpCounters counters;
  std::size_t max_border = 0;
  BorderRunOptions opt;
  opt.max_border_out = &max_border;
  Diagram h = generalized_border(*l, reverse_topo_sort(*l), &counters, opt);

  RunStats stats;
  stats.algo = "border";
  stats.n = l->size();
  stats.width = width(*l);
  stats.edges = h.edge_count();
  stats.max_border = max_border;
  stats.counters = counters;
  stats.wall_ms = 1.25;
  CHECK(stats.max_border <= stats.width);
  CHECK(stats.edges == h.edge_count());

  std::string text = emit_stats(stats);
  auto doc = nlohmann::json::parse(text);
  CHECK(doc["algo"] == "border");
  CHECK(doc["n"] == 16);
  CHECK(doc["width"] == 6);
  CHECK(doc["edges"] == 32);
  CHECK(doc["counters"]["join"] == counters.join_calls);
  CHECK(doc["wall_ms"] == 1.25);
}
