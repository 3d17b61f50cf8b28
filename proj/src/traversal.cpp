#include "hasse/traversal.hpp"

#include <algorithm>
#include <random>

#include "hasse/bits.hpp"

namespace hasse {
namespace {

std::vector<std::size_t> above_counts(const Lattice& l) {
  const std::size_t n = l.size();
  std::vector<std::size_t> above(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element z = 0; z < n; ++z) {
      if (l.lt(x, z)) ++above[x];
    }
  }
  return above;
}

// x < y forces strictly more elements above x, so ascending above-count is
// a valid reverse topological sort; elements in one tie group are mutually
// incomparable.
TopoOrder sort_by_above_count(const Lattice& l) {
  const std::size_t n = l.size();
  std::vector<std::size_t> above = above_counts(l);
  std::vector<std::string> names(n);
  for (Element x = 0; x < n; ++x) names[x] = l.name(x);
  TopoOrder order;
  order.seq.resize(n);
  for (Element x = 0; x < n; ++x) order.seq[x] = x;
  std::sort(order.seq.begin(), order.seq.end(), [&](Element a, Element b) {
    if (above[a] != above[b]) return above[a] < above[b];
    return names[a] < names[b];
  });
  return order;
}

}  // namespace

TopoStream::TopoStream(const Lattice& l, RankKey strategy, bool verify)
    : l_(l), verify_(verify) {
  for (Element x = 0; x < l.size(); ++x) {
    heap_.push({strategy.key(x), l.name(x), x});
  }
}

Element TopoStream::next() {
  Entry entry = heap_.top();
  heap_.pop();
  if (verify_) {
    for (Element earlier : popped_) {
      if (l_.leq(earlier, entry.element)) {
        throw InvalidRankKey("rank key popped " + l_.name(entry.element) + " after the smaller element " +
                             l_.name(earlier));
      }
    }
    popped_.push_back(entry.element);
  }
  return entry.element;
}

TopoOrder reverse_topo_sort(const Lattice& l, const SortStrategy& strategy, bool verify) {
  TopoOrder order;
  if (const auto* above = std::get_if<AboveCount>(&strategy)) {
    (void)above;
    order = sort_by_above_count(l);
  } else if (const auto* random = std::get_if<RandomTies>(&strategy)) {
    order = sort_by_above_count(l);
    std::vector<std::size_t> above = above_counts(l);
    std::mt19937_64 rng(random->seed);
    std::size_t start = 0;
    while (start < order.seq.size()) {
      std::size_t end = start + 1;
      while (end < order.seq.size() && above[order.seq[end]] == above[order.seq[start]]) ++end;
      std::shuffle(order.seq.begin() + start, order.seq.begin() + end, rng);
      start = end;
    }
  } else {
    const auto& rank = std::get<RankKey>(strategy);
    TopoStream stream(l, rank, verify);
    order.seq.reserve(l.size());
    while (!stream.done()) order.seq.push_back(stream.next());
    return order;  // stream already verified element by element
  }
  if (verify && !verify_reverse_topo(l, order.seq)) {
    throw InvalidOrder("strategy produced an order that is not a reverse topological sort");
  }
  return order;
}

bool verify_reverse_topo(const Lattice& l, std::span<const Element> order) {
  const std::size_t n = l.size();
  if (order.size() != n) throw NotAPermutation("order length differs from the lattice size");
  Bitset seen(n);
  for (Element x : order) {
    if (x >= n || seen.test(x)) throw NotAPermutation("order is not a permutation of the carrier");
    seen.set(x);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (l.leq(order[i], order[j])) return false;
    }
  }
  return true;
}

}  // namespace hasse
