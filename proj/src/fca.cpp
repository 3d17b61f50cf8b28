#include "hasse/fca.hpp"

#include <algorithm>
#include <cassert>

#include "hasse/zoo.hpp"

namespace hasse {

std::size_t FormalContext::attribute_index(const std::string& wanted) const {
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i] == wanted) return i;
  }
  throw UnknownAttribute("unknown attribute: " + wanted);
}

AttrMask closure(const FormalContext& ctx, AttrMask a) {
  if ((a & ~ctx.universe()) != 0) {
    throw UnknownAttribute("attribute set has bits outside the context universe");
  }
  AttrMask intent = ctx.universe();
  for (AttrMask row : ctx.rows) {
    if ((row & a) == a) intent &= row;
  }
  return intent;
}

AttrMask closure(const FormalContext& ctx, std::span<const std::string> attribute_names) {
  AttrMask a = 0;
  for (const auto& name : attribute_names) a |= AttrMask{1} << ctx.attribute_index(name);
  return closure(ctx, a);
}

bool lectic_less(AttrMask a, AttrMask b) {
  AttrMask diff = a ^ b;
  if (diff == 0) return false;
  AttrMask lowest = diff & (~diff + 1);
  return (b & lowest) != 0;
}

std::vector<AttrMask> enumerate_intents(const FormalContext& ctx) {
  const std::size_t m = ctx.attributes.size();
  if (m > 30) throw ParameterTooLarge("intent enumeration supports at most 30 attributes");
  std::vector<AttrMask> intents;
  AttrMask a = closure(ctx, 0);
  intents.push_back(a);
  const AttrMask universe = ctx.universe();
  while (a != universe) {
    // NextClosure: highest attribute i not in a whose augmented closure
    // agrees with a below i.
    for (std::size_t idx = m; idx-- > 0;) {
      AttrMask bit = AttrMask{1} << idx;
      if (a & bit) continue;
      AttrMask prefix = bit - 1;
      AttrMask candidate = closure(ctx, (a & prefix) | bit);
      if (((candidate ^ a) & prefix) == 0) {
        a = candidate;
        intents.push_back(a);
        break;
      }
    }
  }
  return intents;
}

ConceptLattice::ConceptLattice(FormalContext ctx, std::vector<AttrMask> intents)
    : ctx_(std::move(ctx)), intents_(std::move(intents)) {
  for (Element i = 0; i < intents_.size(); ++i) index_[intents_[i]] = i;
  top_ = index_of(closure(ctx_, 0));
  bottom_ = index_of(ctx_.universe());
}

std::shared_ptr<ConceptLattice> ConceptLattice::build(FormalContext ctx) {
  std::vector<AttrMask> intents = enumerate_intents(ctx);
  return std::shared_ptr<ConceptLattice>(new ConceptLattice(std::move(ctx), std::move(intents)));
}

Element ConceptLattice::index_of(AttrMask intent) const {
  auto it = index_.find(intent);
  assert(it != index_.end() && "attribute set is not an intent of this context");
  return it->second;
}

Element ConceptLattice::meet(Element x, Element y) const {
  return index_of(closure(ctx_, intents_[x] | intents_[y]));
}

std::string ConceptLattice::name(Element x) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < ctx_.attributes.size(); ++i) {
    if (intents_[x] & (AttrMask{1} << i)) {
      if (!first) out += ",";
      out += ctx_.attributes[i];
      first = false;
    }
  }
  out += "}";
  return out;
}

Embedding powerset_intent_embedding(const ConceptLattice& cl) {
  const auto& ctx = cl.context();
  auto codomain = std::make_shared<PowersetLattice>(static_cast<unsigned>(ctx.attributes.size()),
                                                    Orientation::reversed, ctx.attributes);
  std::vector<Element> map(cl.size());
  for (Element x = 0; x < cl.size(); ++x) map[x] = static_cast<Element>(cl.intent(x));
  return Embedding(std::move(codomain), std::move(map));
}

}  // namespace hasse
