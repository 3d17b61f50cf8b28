#pragma once

#include <span>
#include <string>

#include "hasse/algorithms.hpp"
#include "hasse/diagram.hpp"
#include "hasse/explicit_lattice.hpp"
#include "hasse/fca.hpp"
#include "hasse/types.hpp"

namespace hasse {

// Aggregate reported by instrumented runs. max_border stays below the
// lattice width; edges equals the diagram size.
struct RunStats {
  std::string algo;
  std::size_t n = 0;
  std::size_t width = 0;
  std::size_t edges = 0;
  std::size_t max_border = 0;
  OpCounters counters;
  double wall_ms = 0.0;
};

// Lattice document: {"elements": [...], "order": "covers"|"leq",
// "pairs": [[lower, upper], ...]}. Parsing closes the relation and
// validates it; emitting writes the canonical covers form with pairs
// sorted by name.
OrderRelation parse_lattice_relation(const std::string& text);  // SyntaxError only
std::shared_ptr<ExplicitLattice> parse_lattice_json(const std::string& text);
std::string emit_lattice_json(const Lattice& l);

// Context formats. CXT: "B", blank, object count, attribute count, blank,
// object names, attribute names, then '.'/'X' rows. Transactions: one
// whitespace-separated itemset per line; objects are numbered from 1 and
// the attribute universe is the sorted set of distinct tokens.
FormalContext parse_cxt(const std::string& text);
std::string emit_cxt(const FormalContext& ctx);
FormalContext parse_transactions(const std::string& text);

// Diagram emitters; edges sorted lexicographically by (lower, upper) name.
std::string emit_dot(const Diagram& h, const Lattice& l);
std::string emit_edges_json(const Diagram& h, const Lattice& l);

// One line per processed element:
//   x=N | B={...} | cand={...} | add={(a,b),...} | LC: e=v e=- ...
// Member lists are name-sorted; the LC section lists every element of l in
// index order ("-" before initialization) and is omitted for runs without
// an LC table.
std::string emit_trace(std::span<const TraceRecord> records, const Lattice& l,
                       const Lattice& codomain);
std::string emit_trace(std::span<const TraceRecord> records, const Lattice& l);

std::string emit_stats(const RunStats& stats);
std::string emit_bench_stats(const std::string& suite, std::size_t repeat,
                             std::span<const RunStats> runs);

}  // namespace hasse
