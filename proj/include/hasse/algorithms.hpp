#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hasse/border.hpp"
#include "hasse/diagram.hpp"
#include "hasse/embedding.hpp"
#include "hasse/lattice.hpp"
#include "hasse/traversal.hpp"

namespace hasse {

// Snapshot taken at the end of one main-loop iteration. `border` is the
// border for the next element; `lc` holds one codomain element per lattice
// element (unset before its iteration) and stays empty for runs without an
// LC table.
struct TraceRecord {
  Element x = 0;
  std::vector<Element> border;      // insertion order
  std::vector<Element> candidates;  // generation order, deduplicated
  std::vector<Edge> edges_added;    // emission order
  std::vector<std::optional<Element>> lc;
};

using TraceSink = std::function<void(const TraceRecord&)>;

struct BorderRunOptions {
  bool verify_order = false;  // throws InvalidOrder on a bad sort
  TraceSink trace;
  std::size_t* max_border_out = nullptr;
};

// Walks the lattice in reverse topological order keeping a border; per
// element the deduplicated joins against the border are filtered to their
// minimal elements, which are exactly the upper cover.
Diagram generalized_border(const Lattice& l, const TopoOrder& order,
                           OpCounters* counters = nullptr, const BorderRunOptions& opt = {});

struct IpredRunOptions {
  bool unchecked = false;     // skip embedding validation
  bool verify_order = false;  // throws InvalidOrder on a bad sort
  TraceSink trace;
  std::size_t* max_border_out = nullptr;
};

// Border walk with the constant-time cover test: candidate z is a cover of
// x iff f(x) v LC[z] >= f(z) in the distributive codomain, where LC[z] is
// the running meet of the images of z's lower covers found so far. The
// embedding is validated up front unless opt.unchecked is set.
Diagram generalized_ipred(const Lattice& l, const TopoOrder& order, const Embedding& f,
                          OpCounters* counters = nullptr, const IpredRunOptions& opt = {});

// Cover test without extra state: with Y the lower covers of z seen before
// x, x is a lower cover of z iff the meet of {x v y : y in Y} is >= z
// (empty meet = top).
bool slow_cover_test(const Lattice& l, Element x, Element z, std::span<const Element> y_set);

// Distributive shortcut: x is a lower cover of z iff x v (meet of Y) >= z,
// with the meet maintained incrementally by the caller.
bool distributive_cover_test(const Lattice& l, Element x, Element z, Element meet_of_y);

}  // namespace hasse
