#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "hasse/bits.hpp"
#include "hasse/lattice.hpp"

namespace hasse {

// Working set of elements that can still contribute Hasse edges. Keeps
// insertion order (candidate generation iterates it) plus a membership
// bitset for O(1) removal tests.
class Border {
 public:
  explicit Border(std::size_t n) : member_(n) {}

  bool contains(Element x) const { return member_.test(x); }
  std::size_t size() const { return items_.size(); }
  std::span<const Element> items() const { return items_; }

  void insert(Element x) {
    if (member_.test(x)) return;
    member_.set(x);
    items_.push_back(x);
  }

  // Stable removal; no-op for non-members.
  void erase(Element x) {
    if (!member_.test(x)) return;
    member_.reset(x);
    items_.erase(std::find(items_.begin(), items_.end(), x));
  }

 private:
  std::vector<Element> items_;
  Bitset member_;
};

// B is a border for x when no border element sits at or below x while every
// upper cover of x dominates some border element. uc_of_x is the cover
// source (oracle output or a finished diagram row).
bool is_border(const Lattice& l, std::span<const Element> b, Element x,
               std::span<const Element> uc_of_x);

// Proper border: pairwise incomparable.
bool is_proper(const Lattice& l, std::span<const Element> b);

// B union {x} minus cover, as plain set algebra.
Border standard_step(const Border& b, Element x, std::span<const Element> cover);

// Elements of s with nothing in s strictly below them. Pairwise comparisons
// with early exit.
std::vector<Element> minimals(const Lattice& l, std::span<const Element> s);

// Upper cover of x extracted from a border for x: deduplicated joins
// {x v y : y in B}, filtered to the minimal ones.
std::vector<Element> cover_from_border(const Lattice& l, Element x, std::span<const Element> b);

}  // namespace hasse
