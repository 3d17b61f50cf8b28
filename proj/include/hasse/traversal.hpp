#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <variant>
#include <vector>

#include "hasse/lattice.hpp"

namespace hasse {

// A reverse topological sort: whenever x <= y, y appears no later than x.
// Top is therefore first and bottom last.
struct TopoOrder {
  std::vector<Element> seq;
};

// Ascending |{z : z > x}| with lexicographic name tie-break. Needs only the
// order predicate, no cover relation.
struct AboveCount {};

// Above-count groups with ties shuffled by the seed.
struct RandomTies {
  std::uint64_t seed = 0;
};

// Heap keyed by a user function that must be monotone against the order:
// x < y implies key(y) < key(x). Violations surface as InvalidRankKey when
// verification is enabled.
struct RankKey {
  std::function<std::int64_t(Element)> key;
};

using SortStrategy = std::variant<AboveCount, RandomTies, RankKey>;

// Streaming heap over a rank key: yields the next element on demand instead
// of materializing the whole sort. Single consumer.
class TopoStream {
 public:
  TopoStream(const Lattice& l, RankKey strategy, bool verify = false);

  bool done() const { return heap_.empty(); }
  Element next();  // throws InvalidRankKey when verify finds a violation

 private:
  struct Entry {
    std::int64_t key;
    std::string name;
    Element element;
    bool operator>(const Entry& other) const {
      if (key != other.key) return key > other.key;
      return name > other.name;
    }
  };

  const Lattice& l_;
  bool verify_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
  std::vector<Element> popped_;
};

TopoOrder reverse_topo_sort(const Lattice& l, const SortStrategy& strategy = AboveCount{},
                            bool verify = false);

// True iff `order` is a reverse topological sort of l. Throws
// NotAPermutation when the sequence is not a permutation of the carrier.
bool verify_reverse_topo(const Lattice& l, std::span<const Element> order);

}  // namespace hasse
