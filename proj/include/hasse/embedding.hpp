#pragma once

#include <memory>
#include <vector>

#include "hasse/lattice.hpp"
#include "hasse/report.hpp"

namespace hasse {

// Injective join-semilattice homomorphism from a finite lattice into a
// (distributive) codomain lattice. The map is tabulated per element; the
// codomain is shared and kept alive by the embedding.
class Embedding {
 public:
  Embedding(std::shared_ptr<const Lattice> codomain, std::vector<Element> map)
      : codomain_(std::move(codomain)), map_(std::move(map)) {}

  const Lattice& codomain() const { return *codomain_; }
  std::shared_ptr<const Lattice> codomain_ptr() const { return codomain_; }
  std::size_t domain_size() const { return map_.size(); }

  Element operator()(Element x) const {
    if (counters_ != nullptr) ++counters_->f_calls;
    return map_[x];
  }

  // A view whose codomain operations and f applications feed `counters`.
  Embedding counted(OpCounters& counters) const {
    Embedding view(std::make_shared<CountingLattice>(codomain_, counters), map_);
    view.counters_ = &counters;
    return view;
  }

 private:
  std::shared_ptr<const Lattice> codomain_;
  std::vector<Element> map_;
  OpCounters* counters_ = nullptr;
};

// f = identity into the lattice itself. Only valid for iPred when the
// lattice is distributive; validation decides.
Embedding identity_embedding(std::shared_ptr<const Lattice> l);

// f(x) = the set of meet-irreducible elements above x, into the reversed
// powerset over the meet-irreducibles (join = intersection). Works for any
// finite lattice; the irreducibles come from the brute-force diagram.
Embedding meet_irreducible_embedding(std::shared_ptr<const Lattice> l);

// Maps elements of the domain to codomain elements with equal names.
// Throws Error when some name is missing.
Embedding embedding_by_name(const Lattice& domain, std::shared_ptr<const Lattice> codomain);

// Checks injectivity, join preservation f(x v y) = f(x) v f(y) (exhaustive
// for n <= 64, 10000 sampled pairs above), bottom preservation and codomain
// distributivity. Meet preservation is probed as well but reported only as
// a note: join homomorphisms routinely fail it.
ValidationReport validate_embedding(const Embedding& emb, const Lattice& domain);

}  // namespace hasse
