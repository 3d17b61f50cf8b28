#pragma once

#include <cstdint>
#include <vector>

#include "hasse/diagram.hpp"
#include "hasse/lattice.hpp"
#include "hasse/report.hpp"

namespace hasse {

class Embedding;

// Ground-truth Hasse diagram by brute force: (x, y) is an edge iff x < y
// with nothing strictly between. Quadratic in memory (one order bit matrix),
// cubic in bit operations.
Diagram oracle_hasse(const Lattice& l);

// Per-element covers, computed directly from the order.
std::vector<Element> upper_cover(const Lattice& l, Element x);
std::vector<Element> lower_cover(const Lattice& l, Element y);

// Maximum antichain size via Dilworth: n minus a maximum matching of the
// strict order, found with Hopcroft-Karp.
std::size_t width(const Lattice& l);

// Exponential reference for width, usable up to n = 20.
std::size_t max_antichain_exhaustive(const Lattice& l);

struct DistributivityResult {
  bool distributive = true;
  // Witness triple when not distributive: meet(x, join(y,z)) differs from
  // join(meet(x,y), meet(x,z)).
  Element x = 0, y = 0, z = 0;
};

// Full triple sweep with early exit. For n <= 2048 the join/meet tables are
// materialized first so the sweep runs on flat arrays.
DistributivityResult is_distributive(const Lattice& l);

// Exhaustive lattice-axiom suite: partial order laws, lub/glb uniqueness,
// absorption, commutativity, associativity, idempotence, unit laws, and
// x <= y <=> join(x,y) = y <=> meet(x,y) = x. Cubic; intended for n <= 64.
ValidationReport check_lattice_axioms(const Lattice& l);

// Randomized version of the same laws for larger instances.
ValidationReport check_lattice_axioms_sampled(const Lattice& l, std::size_t samples,
                                              std::uint64_t seed);

// Law suite tied to the cover structure:
//  - two distinct lower covers of y always join to y;
//  - for x < y there is a cover step immediately above x and one
//    immediately below y;
//  - with an embedding f: f(meet of Y) <= meet of f(Y) on random subsets Y.
// Exhaustive for n <= 64, sampled (10000 draws) above.
ValidationReport check_paper_laws(const Lattice& l, const Embedding* emb = nullptr,
                                  std::uint64_t seed = 0x9e3779b97f4a7c15ull);

// Elements with exactly one upper cover, top excluded by construction.
std::vector<Element> meet_irreducibles(const Lattice& l, const Diagram& hasse);

}  // namespace hasse
