#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "hasse/types.hpp"

namespace hasse {

// Abstract finite lattice. Elements are the dense indices 0..size()-1;
// implementations supply the order test, join, meet, top, bottom and a
// display name per element. Instances are immutable after construction and
// safe to share across concurrent readers.
class Lattice {
 public:
  virtual ~Lattice() = default;

  virtual std::size_t size() const = 0;
  virtual Element top() const = 0;
  virtual Element bottom() const = 0;
  virtual bool leq(Element x, Element y) const = 0;
  virtual Element join(Element x, Element y) const = 0;
  virtual Element meet(Element x, Element y) const = 0;
  virtual std::string name(Element x) const = 0;

  bool lt(Element x, Element y) const { return x != y && leq(x, y); }

  // Linear scan by display name.
  std::optional<Element> find(std::string_view name) const;
};

// Counting view over a lattice: forwards every operation to the base and
// bumps the attached counters. One wrapper per run, per thread; the wrapped
// lattice itself stays shareable.
class CountingLattice final : public Lattice {
 public:
  CountingLattice(const Lattice& base, OpCounters& counters)
      : base_(&base), counters_(&counters) {}
  CountingLattice(std::shared_ptr<const Lattice> base, OpCounters& counters)
      : base_(base.get()), keepalive_(std::move(base)), counters_(&counters) {}

  std::size_t size() const override { return base_->size(); }
  Element top() const override { return base_->top(); }
  Element bottom() const override { return base_->bottom(); }
  bool leq(Element x, Element y) const override {
    ++counters_->leq_calls;
    return base_->leq(x, y);
  }
  Element join(Element x, Element y) const override {
    ++counters_->join_calls;
    return base_->join(x, y);
  }
  Element meet(Element x, Element y) const override {
    ++counters_->meet_calls;
    return base_->meet(x, y);
  }
  std::string name(Element x) const override { return base_->name(x); }

  const Lattice& base() const { return *base_; }

 private:
  const Lattice* base_;
  std::shared_ptr<const Lattice> keepalive_;
  OpCounters* counters_;
};

}  // namespace hasse
