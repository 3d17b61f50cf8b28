#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hasse/explicit_lattice.hpp"
#include "hasse/lattice.hpp"

namespace hasse {

enum class Orientation { standard, reversed };

// Powerset of k attributes; element index == attribute bitmask.
// standard: order is subset inclusion, join = union, meet = intersection.
// reversed: order is superset inclusion, join = intersection, meet = union,
// top = {} and bottom = the full attribute set.
class PowersetLattice final : public Lattice {
 public:
  // attr_names defaults to "a", "b", ...; pass context attribute names to
  // keep traces readable. k is capped at 62 by the mask width.
  PowersetLattice(unsigned k, Orientation orientation, std::vector<std::string> attr_names = {});

  std::size_t size() const override { return std::size_t{1} << k_; }
  Element top() const override;
  Element bottom() const override;
  bool leq(Element x, Element y) const override;
  Element join(Element x, Element y) const override;
  Element meet(Element x, Element y) const override;
  std::string name(Element x) const override;

  unsigned attribute_count() const { return k_; }
  Orientation orientation() const { return orientation_; }

 private:
  unsigned k_;
  Orientation orientation_;
  std::vector<std::string> attr_names_;
};

// Divisors of n ordered by divisibility; join = lcm, meet = gcd.
class DivisorLattice final : public Lattice {
 public:
  explicit DivisorLattice(std::int64_t n);

  std::size_t size() const override { return divisors_.size(); }
  Element top() const override { return static_cast<Element>(divisors_.size() - 1); }
  Element bottom() const override { return 0; }
  bool leq(Element x, Element y) const override { return divisors_[y] % divisors_[x] == 0; }
  Element join(Element x, Element y) const override;
  Element meet(Element x, Element y) const override;
  std::string name(Element x) const override { return std::to_string(divisors_[x]); }

  std::int64_t value(Element x) const { return divisors_[x]; }

 private:
  Element index_of(std::int64_t d) const;

  std::int64_t n_;
  std::vector<std::int64_t> divisors_;  // ascending
  std::unordered_map<std::int64_t, Element> index_;
};

// Partitions of {1..k} ordered by refinement (finer <= coarser);
// join = finest common coarsening, meet = common refinement.
// Partitions are stored as restricted growth strings in lexicographic
// order, so the single-block partition (top) has index 0 and the
// all-singletons partition (bottom) comes last. Names use "/" between
// blocks, e.g. "12/3".
class PartitionLattice final : public Lattice {
 public:
  explicit PartitionLattice(unsigned k);

  std::size_t size() const override { return rgs_.size(); }
  Element top() const override { return 0; }
  Element bottom() const override { return static_cast<Element>(rgs_.size() - 1); }
  bool leq(Element x, Element y) const override;
  Element join(Element x, Element y) const override;
  Element meet(Element x, Element y) const override;
  std::string name(Element x) const override;

 private:
  Element index_of(const std::vector<std::uint8_t>& rgs) const;
  static std::vector<std::uint8_t> canonical(std::vector<std::uint8_t> labels);

  unsigned k_;
  std::vector<std::vector<std::uint8_t>> rgs_;
  std::unordered_map<std::string, Element> index_;
};

// The three running examples: the five-element diamond M3, the six-element
// lattice it embeds into, and the six-element distributive lattice.
// Element names are exactly "top", "1", "2", "3" ("4") and "bot" so that
// emitted traces are byte-stable.
std::shared_ptr<ExplicitLattice> fixture_fig1a();
std::shared_ptr<ExplicitLattice> fixture_fig1b();
std::shared_ptr<ExplicitLattice> fixture_fig2();

// Generator entry points with the documented parameter caps.
std::shared_ptr<PowersetLattice> powerset(unsigned k, Orientation orientation = Orientation::standard);  // k <= 20
std::shared_ptr<DivisorLattice> divisor(std::int64_t n);                                                 // n <= 1'000'000
std::shared_ptr<PartitionLattice> partition(unsigned k);                                                  // k <= 6

// "a", "b", ..., "z", "aa", "ab", ... — default attribute names.
std::vector<std::string> default_attribute_names(unsigned k);

}  // namespace hasse
