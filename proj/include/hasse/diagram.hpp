#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "hasse/types.hpp"

namespace hasse {

// One cover edge: lower is an immediate predecessor of upper.
struct Edge {
  Element lower;
  Element upper;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// The set of cover edges of a lattice, with per-node upper/lower cover
// views. Edges are kept in insertion order per node; equality compares the
// underlying edge sets.
class Diagram {
 public:
  explicit Diagram(std::size_t node_count)
      : uc_(node_count), lc_(node_count) {}

  void add_edge(Element lower, Element upper) {
    uc_[lower].push_back(upper);
    lc_[upper].push_back(lower);
    ++edge_count_;
  }

  std::size_t node_count() const { return uc_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<Element>& upper_covers(Element x) const { return uc_[x]; }
  const std::vector<Element>& lower_covers(Element y) const { return lc_[y]; }

  bool contains(Element lower, Element upper) const;
  std::vector<Edge> sorted_edges() const;  // ascending (lower, upper) index order

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.uc_.size() == b.uc_.size() && a.sorted_edges() == b.sorted_edges();
  }

 private:
  std::vector<std::vector<Element>> uc_;
  std::vector<std::vector<Element>> lc_;
  std::size_t edge_count_ = 0;
};

}  // namespace hasse
