#include "hasse/diagram.hpp"

#include <algorithm>

namespace hasse {

bool Diagram::contains(Element lower, Element upper) const {
  const auto& ups = uc_[lower];
  return std::find(ups.begin(), ups.end(), upper) != ups.end();
}

std::vector<Edge> Diagram::sorted_edges() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count_);
  for (Element lower = 0; lower < uc_.size(); ++lower) {
    for (Element upper : uc_[lower]) edges.push_back({lower, upper});
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace hasse
