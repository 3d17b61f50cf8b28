#include "hasse/algorithms.hpp"

#include <algorithm>
#include <cassert>

#include "hasse/bits.hpp"

namespace hasse {
namespace {

void ensure_valid_order(const Lattice& l, const TopoOrder& order, bool verify) {
  if (!verify) {
    if (order.seq.size() != l.size()) {
      throw NotAPermutation("order length differs from the lattice size");
    }
    return;
  }
  if (!verify_reverse_topo(l, order.seq)) {
    throw InvalidOrder("sequence is not a reverse topological sort");
  }
}

// Joins x against the border in insertion order, deduplicating on the fly.
// `seen` is a caller-owned scratch bitset; touched bits are cleared again
// through the returned candidate list.
void collect_candidates(const Lattice& l, const Border& b, Element x, Bitset& seen,
                        std::vector<Element>& out) {
  out.clear();
  for (Element y : b.items()) {
    Element z = l.join(x, y);
    if (!seen.test(z)) {
      seen.set(z);
      out.push_back(z);
    }
  }
  for (Element z : out) seen.reset(z);
}

}  // namespace

Diagram generalized_border(const Lattice& l, const TopoOrder& order, OpCounters* counters,
                           const BorderRunOptions& opt) {
  ensure_valid_order(l, order, opt.verify_order);
  OpCounters scratch;
  CountingLattice counted(l, counters != nullptr ? *counters : scratch);
  const Lattice& view = counters != nullptr ? static_cast<const Lattice&>(counted) : l;

  const std::size_t n = l.size();
  Diagram h(n);
  Border b(n);
  Bitset seen(n);
  std::vector<Element> candidates;
  std::size_t max_border = 0;

  for (Element x : order.seq) {
    collect_candidates(view, b, x, seen, candidates);
    std::vector<Element> cover = minimals(view, candidates);
    for (Element z : cover) h.add_edge(x, z);
    b.insert(x);
    for (Element z : cover) b.erase(z);
    max_border = std::max(max_border, b.size());
    if (opt.trace) {
      TraceRecord rec;
      rec.x = x;
      rec.border.assign(b.items().begin(), b.items().end());
      rec.candidates = candidates;
      for (Element z : cover) rec.edges_added.push_back({x, z});
      opt.trace(rec);
    }
  }
  if (opt.max_border_out != nullptr) *opt.max_border_out = max_border;
  return h;
}

Diagram generalized_ipred(const Lattice& l, const TopoOrder& order, const Embedding& f,
                          OpCounters* counters, const IpredRunOptions& opt) {
  if (!opt.unchecked) {
    ValidationReport report = validate_embedding(f, l);
    if (!report.ok()) throw EmbeddingInvalid(report.summary());
  }
  ensure_valid_order(l, order, opt.verify_order);
  OpCounters scratch;
  CountingLattice counted(l, counters != nullptr ? *counters : scratch);
  const Lattice& view = counters != nullptr ? static_cast<const Lattice&>(counted) : l;
  const Lattice& lp = f.codomain();

  const std::size_t n = l.size();
  Diagram h(n);
  Border b(n);
  Bitset seen(n);
  std::vector<Element> candidates;
  std::vector<Element> lc(n, 0);
  std::vector<char> lc_set(n, 0);
  std::size_t max_border = 0;

  for (Element x : order.seq) {
    lc[x] = lp.top();
    lc_set[x] = 1;
    collect_candidates(view, b, x, seen, candidates);
    const Element fx = f(x);
    TraceRecord rec;
    for (Element z : candidates) {
      assert(lc_set[z] && "candidates precede x in a reverse topological sort");
      // Cover test: f(x) v LC[z] >= f(z).
      if (lp.leq(f(z), lp.join(fx, lc[z]))) {
        h.add_edge(x, z);
        if (opt.trace) rec.edges_added.push_back({x, z});
        lc[z] = lp.meet(lc[z], fx);
        b.erase(z);
      }
    }
    b.insert(x);
    max_border = std::max(max_border, b.size());
    if (opt.trace) {
      rec.x = x;
      rec.border.assign(b.items().begin(), b.items().end());
      rec.candidates = candidates;
      rec.lc.resize(n);
      for (Element e = 0; e < n; ++e) {
        if (lc_set[e]) rec.lc[e] = lc[e];
      }
      opt.trace(rec);
    }
  }
  if (opt.max_border_out != nullptr) *opt.max_border_out = max_border;
  return h;
}

bool slow_cover_test(const Lattice& l, Element x, Element z, std::span<const Element> y_set) {
  Element acc = l.top();  // empty meet
  for (Element y : y_set) acc = l.meet(acc, l.join(x, y));
  return l.leq(z, acc);
}

bool distributive_cover_test(const Lattice& l, Element x, Element z, Element meet_of_y) {
  return l.leq(z, l.join(x, meet_of_y));
}

}  // namespace hasse
