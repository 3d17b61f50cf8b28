#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hasse/bits.hpp"
#include "hasse/lattice.hpp"
#include "hasse/report.hpp"

namespace hasse {

enum class RelationKind { covers, leq };

// Raw order input: named elements plus (lower, upper) pairs. Cover pairs and
// general leq pairs load the same way; both are closed reflexively and
// transitively.
struct OrderRelation {
  std::vector<std::string> names;
  std::vector<std::pair<Element, Element>> pairs;
  RelationKind kind = RelationKind::covers;
};

// Resolves string pairs against the declared element list. Throws
// SyntaxError on duplicate or undeclared names.
OrderRelation make_relation(std::vector<std::string> names,
                            const std::vector<std::pair<std::string, std::string>>& pairs,
                            RelationKind kind = RelationKind::covers);

// Finite poset with a reflexively-transitively closed order matrix.
// up(x) = {y : x <= y} as a bit row; down is the transpose.
class ExplicitPoset {
 public:
  static ExplicitPoset from_relation(const OrderRelation& rel);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Element x) const { return names_[x]; }
  bool leq(Element x, Element y) const { return up_[x].test(y); }
  const Bitset& up(Element x) const { return up_[x]; }
  const Bitset& down(Element y) const { return down_[y]; }

  // Appends one element below every existing one. Used by the semilattice
  // completion; the new element gets the last index.
  void append_bottom(std::string bottom_name);

 private:
  std::vector<std::string> names_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
};

// Checks that the closed relation is a partial order in which every pair of
// elements has a unique least upper bound and a unique greatest lower bound.
// The report carries the first offending pair (or cycle witness).
ValidationReport validate_lattice(const ExplicitPoset& poset);

// Same checks restricted to the join side: partial order + unique lub per
// pair. A poset passing this is a join-semilattice.
ValidationReport validate_join_semilattice(const ExplicitPoset& poset);

// Table-backed lattice over an explicit order matrix. leq is a bit probe;
// join/meet scan the up/down row intersection and are memoized into n x n
// tables on first use when n <= 4096.
class ExplicitLattice final : public Lattice {
 public:
  // Precondition: validate_lattice(poset) passed.
  static std::shared_ptr<ExplicitLattice> from_poset(ExplicitPoset poset);
  // Closes and validates the relation; throws LatticeValidationError.
  static std::shared_ptr<ExplicitLattice> build(const OrderRelation& rel);

  std::size_t size() const override { return poset_.size(); }
  Element top() const override { return top_; }
  Element bottom() const override { return bottom_; }
  bool leq(Element x, Element y) const override { return poset_.leq(x, y); }
  Element join(Element x, Element y) const override;
  Element meet(Element x, Element y) const override;
  std::string name(Element x) const override { return poset_.name(x); }

  const ExplicitPoset& poset() const { return poset_; }

 private:
  explicit ExplicitLattice(ExplicitPoset poset);

  Element lub_scan(Element x, Element y) const;
  Element glb_scan(Element x, Element y) const;

  static constexpr std::size_t kTableLimit = 4096;

  ExplicitPoset poset_;
  Element top_ = 0;
  Element bottom_ = 0;
  mutable std::once_flag join_once_, meet_once_;
  mutable std::vector<Element> join_table_, meet_table_;
};

// Completes a finite join-semilattice into a lattice: if the poset lacks a
// unique minimum, one synthetic bottom element (named "bot", uniquified if
// taken) is appended below all others; meets then exist and are derived from
// the order. Throws InputNotJoinSemilattice when some pair has no unique
// least upper bound.
std::shared_ptr<ExplicitLattice> complete_with_bottom(const ExplicitPoset& s);

// Meet derived from join over a join-semilattice with bottom:
// the join of all common lower bounds of xs. Touches only leq, join and
// bottom of `s`; equals s.meet(...) whenever the meet exists.
Element meet_via_join(const Lattice& s, std::span<const Element> xs);

}  // namespace hasse
