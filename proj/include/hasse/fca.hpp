#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hasse/embedding.hpp"
#include "hasse/lattice.hpp"

namespace hasse {

// Attribute sets are bitmasks in column order of the source file.
using AttrMask = std::uint64_t;

// Objects x attributes incidence relation.
struct FormalContext {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<AttrMask> rows;  // one mask per object

  AttrMask universe() const {
    return attributes.empty() ? 0 : (AttrMask(~std::uint64_t{0}) >> (64 - attributes.size()));
  }
  std::size_t attribute_index(const std::string& name) const;  // throws UnknownAttribute
};

// Double prime: the attributes shared by every object that has all of `a`.
// Extensive, monotone, idempotent; with no objects every set closes to the
// full attribute set. Throws UnknownAttribute for bits outside the universe.
AttrMask closure(const FormalContext& ctx, AttrMask a);
AttrMask closure(const FormalContext& ctx, std::span<const std::string> attribute_names);

// Lectic order: a < b iff the lowest differing attribute belongs to b.
bool lectic_less(AttrMask a, AttrMask b);

// All closed attribute sets in ascending lectic order (NextClosure).
// Supports at most 30 attributes.
std::vector<AttrMask> enumerate_intents(const FormalContext& ctx);

// The lattice of intents: x <= y iff x contains y, join = intersection,
// meet = closure of the union, top = closure of the empty set, bottom = the
// full attribute set.
class ConceptLattice final : public Lattice {
 public:
  static std::shared_ptr<ConceptLattice> build(FormalContext ctx);

  std::size_t size() const override { return intents_.size(); }
  Element top() const override { return top_; }
  Element bottom() const override { return bottom_; }
  bool leq(Element x, Element y) const override {
    return (intents_[x] & intents_[y]) == intents_[y];
  }
  Element join(Element x, Element y) const override {
    return index_of(intents_[x] & intents_[y]);
  }
  Element meet(Element x, Element y) const override;
  std::string name(Element x) const override;

  const FormalContext& context() const { return ctx_; }
  const std::vector<AttrMask>& intents() const { return intents_; }
  AttrMask intent(Element x) const { return intents_[x]; }
  Element index_of(AttrMask intent) const;

 private:
  ConceptLattice(FormalContext ctx, std::vector<AttrMask> intents);

  FormalContext ctx_;
  std::vector<AttrMask> intents_;
  std::unordered_map<AttrMask, Element> index_;
  Element top_ = 0;
  Element bottom_ = 0;
};

// The identity embedding of the concept lattice into the reversed powerset
// over its attributes: injective, join-preserving because intents are
// closed under intersection, and the codomain is distributive.
Embedding powerset_intent_embedding(const ConceptLattice& cl);

}  // namespace hasse
