#include "hasse/border.hpp"

#include <algorithm>

namespace hasse {

bool is_border(const Lattice& l, std::span<const Element> b, Element x,
               std::span<const Element> uc_of_x) {
  for (Element y : b) {
    if (l.leq(y, x)) return false;
  }
  for (Element z : uc_of_x) {
    bool dominated = false;
    for (Element y : b) {
      if (l.leq(y, z)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

bool is_proper(const Lattice& l, std::span<const Element> b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (l.leq(b[i], b[j]) || l.leq(b[j], b[i])) return false;
    }
  }
  return true;
}

Border standard_step(const Border& b, Element x, std::span<const Element> cover) {
  Border next = b;
  next.insert(x);
  for (Element z : cover) next.erase(z);
  return next;
}

std::vector<Element> minimals(const Lattice& l, std::span<const Element> s) {
  std::vector<Element> out;
  out.reserve(s.size());
  for (Element candidate : s) {
    bool minimal = true;
    for (Element other : s) {
      if (other != candidate && l.leq(other, candidate)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(candidate);
  }
  return out;
}

std::vector<Element> cover_from_border(const Lattice& l, Element x, std::span<const Element> b) {
  std::vector<Element> candidates;
  candidates.reserve(b.size());
  for (Element y : b) {
    Element z = l.join(x, y);
    if (std::find(candidates.begin(), candidates.end(), z) == candidates.end()) {
      candidates.push_back(z);
    }
  }
  return minimals(l, candidates);
}

}  // namespace hasse
