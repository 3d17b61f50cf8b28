#include "hasse/explicit_lattice.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

namespace hasse {
namespace {

// Scans the nonempty bit row `bounds` for its minimum element under the
// poset order. With a unique minimum present, a single pass suffices: the
// running candidate is replaced whenever a smaller element shows up.
Element min_of(const ExplicitPoset& p, const Bitset& bounds) {
  auto i = bounds.find_first();
  Element best = static_cast<Element>(i);
  for (i = bounds.find_next(i); i != Bitset::npos; i = bounds.find_next(i)) {
    if (p.leq(static_cast<Element>(i), best)) best = static_cast<Element>(i);
  }
  return best;
}

Element max_of(const ExplicitPoset& p, const Bitset& bounds) {
  auto i = bounds.find_first();
  Element best = static_cast<Element>(i);
  for (i = bounds.find_next(i); i != Bitset::npos; i = bounds.find_next(i)) {
    if (p.leq(best, static_cast<Element>(i))) best = static_cast<Element>(i);
  }
  return best;
}

// Partial-order core shared by the lattice and semilattice validators.
// The matrix is closed by construction, so reflexivity and transitivity
// hold; only antisymmetry (no cycles) can fail.
bool check_antisymmetry(const ExplicitPoset& p, ValidationReport& report) {
  for (Element x = 0; x < p.size(); ++x) {
    Bitset both = p.up(x) & p.down(x);
    if (both.count() > 1) {
      both.reset(x);
      Element y = static_cast<Element>(both.find_first());
      report.fail("antisymmetry", {p.name(x), p.name(y)},
                  "elements are comparable in both directions (cycle)");
      return false;
    }
  }
  return true;
}

// Unique least upper bound for the pair (x, y). On failure the report names
// the pair and two incomparable minimal upper bounds.
bool check_unique_lub(const ExplicitPoset& p, Element x, Element y, ValidationReport& report) {
  Bitset ubs = p.up(x) & p.up(y);
  if (ubs.none()) {
    report.fail("lub-exists", {p.name(x), p.name(y)}, "pair has no upper bound");
    return false;
  }
  Element m = min_of(p, ubs);
  if (!ubs.is_subset_of(p.up(m))) {
    Bitset stray = ubs - p.up(m);
    Element other = static_cast<Element>(stray.find_first());
    report.fail("lub-unique", {p.name(x), p.name(y)},
                "pair has two minimal upper bounds: " + p.name(m) + " and " + p.name(other));
    return false;
  }
  return true;
}

bool check_unique_glb(const ExplicitPoset& p, Element x, Element y, ValidationReport& report) {
  Bitset lbs = p.down(x) & p.down(y);
  if (lbs.none()) {
    report.fail("glb-exists", {p.name(x), p.name(y)}, "pair has no lower bound");
    return false;
  }
  Element m = max_of(p, lbs);
  if (!lbs.is_subset_of(p.down(m))) {
    Bitset stray = lbs - p.down(m);
    Element other = static_cast<Element>(stray.find_first());
    report.fail("glb-unique", {p.name(x), p.name(y)},
                "pair has two maximal lower bounds: " + p.name(m) + " and " + p.name(other));
    return false;
  }
  return true;
}

}  // namespace

OrderRelation make_relation(std::vector<std::string> names,
                            const std::vector<std::pair<std::string, std::string>>& pairs,
                            RelationKind kind) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw SyntaxError("duplicate element name: " + names[i]);
    }
  }
  OrderRelation rel;
  rel.names = std::move(names);
  rel.kind = kind;
  rel.pairs.reserve(pairs.size());
  for (const auto& [lo, hi] : pairs) {
    auto l = index.find(lo);
    auto h = index.find(hi);
    if (l == index.end()) throw SyntaxError("pair references undeclared element: " + lo);
    if (h == index.end()) throw SyntaxError("pair references undeclared element: " + hi);
    rel.pairs.emplace_back(l->second, h->second);
  }
  return rel;
}

ExplicitPoset ExplicitPoset::from_relation(const OrderRelation& rel) {
  const std::size_t n = rel.names.size();
  {
    std::unordered_set<std::string> seen;
    for (const auto& name : rel.names) {
      if (!seen.insert(name).second) throw SyntaxError("duplicate element name: " + name);
    }
  }
  ExplicitPoset p;
  p.names_ = rel.names;
  p.up_.assign(n, Bitset(n));
  for (Element x = 0; x < n; ++x) p.up_[x].set(x);
  for (const auto& [lo, hi] : rel.pairs) {
    if (lo >= n || hi >= n) throw SyntaxError("pair index out of range");
    p.up_[lo].set(hi);
  }
  // Warshall closure over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];
    }
  }
  p.down_.assign(n, Bitset(n));
  for (Element x = 0; x < n; ++x) {
    for (auto y = p.up_[x].find_first(); y != Bitset::npos; y = p.up_[x].find_next(y)) {
      p.down_[y].set(x);
    }
  }
  return p;
}

void ExplicitPoset::append_bottom(std::string bottom_name) {
  const std::size_t n = names_.size();
  names_.push_back(std::move(bottom_name));
  for (auto& row : up_) row.resize(n + 1);  // nothing is above the new element
  Bitset all(n + 1);
  all.set();
  up_.push_back(all);
  for (auto& row : down_) {
    row.resize(n + 1);
    row.set(n);
  }
  Bitset self(n + 1);
  self.set(n);
  down_.push_back(self);
}

ValidationReport validate_lattice(const ExplicitPoset& poset) {
  ValidationReport report;
  if (poset.size() == 0) {
    report.fail("nonempty", {}, "a lattice needs at least one element");
    return report;
  }
  if (!check_antisymmetry(poset, report)) return report;
  for (Element x = 0; x < poset.size(); ++x) {
    for (Element y = x + 1; y < poset.size(); ++y) {
      if (!check_unique_lub(poset, x, y, report)) return report;
      if (!check_unique_glb(poset, x, y, report)) return report;
    }
  }
  return report;
}

ValidationReport validate_join_semilattice(const ExplicitPoset& poset) {
  ValidationReport report;
  if (poset.size() == 0) {
    report.fail("nonempty", {}, "a semilattice needs at least one element");
    return report;
  }
  if (!check_antisymmetry(poset, report)) return report;
  for (Element x = 0; x < poset.size(); ++x) {
    for (Element y = x + 1; y < poset.size(); ++y) {
      if (!check_unique_lub(poset, x, y, report)) return report;
    }
  }
  return report;
}

ExplicitLattice::ExplicitLattice(ExplicitPoset poset) : poset_(std::move(poset)) {
  for (Element x = 0; x < poset_.size(); ++x) {
    if (poset_.up(x).count() == 1) top_ = x;
    if (poset_.down(x).count() == 1) bottom_ = x;
  }
}

std::shared_ptr<ExplicitLattice> ExplicitLattice::from_poset(ExplicitPoset poset) {
  assert(validate_lattice(poset).ok());
  return std::shared_ptr<ExplicitLattice>(new ExplicitLattice(std::move(poset)));
}

std::shared_ptr<ExplicitLattice> ExplicitLattice::build(const OrderRelation& rel) {
  ExplicitPoset poset = ExplicitPoset::from_relation(rel);
  ValidationReport report = validate_lattice(poset);
  if (!report.ok()) throw LatticeValidationError(std::move(report));
  return std::shared_ptr<ExplicitLattice>(new ExplicitLattice(std::move(poset)));
}

Element ExplicitLattice::lub_scan(Element x, Element y) const {
  Bitset ubs = poset_.up(x) & poset_.up(y);
  return min_of(poset_, ubs);
}

Element ExplicitLattice::glb_scan(Element x, Element y) const {
  Bitset lbs = poset_.down(x) & poset_.down(y);
  return max_of(poset_, lbs);
}

Element ExplicitLattice::join(Element x, Element y) const {
  const std::size_t n = size();
  if (n > kTableLimit) return lub_scan(x, y);
  std::call_once(join_once_, [this, n] {
    join_table_.resize(n * n);
    for (Element a = 0; a < n; ++a) {
      join_table_[a * n + a] = a;
      for (Element b = a + 1; b < n; ++b) {
        Element j = lub_scan(a, b);
        join_table_[a * n + b] = j;
        join_table_[b * n + a] = j;
      }
    }
  });
  return join_table_[x * n + y];
}

Element ExplicitLattice::meet(Element x, Element y) const {
  const std::size_t n = size();
  if (n > kTableLimit) return glb_scan(x, y);
  std::call_once(meet_once_, [this, n] {
    meet_table_.resize(n * n);
    for (Element a = 0; a < n; ++a) {
      meet_table_[a * n + a] = a;
      for (Element b = a + 1; b < n; ++b) {
        Element m = glb_scan(a, b);
        meet_table_[a * n + b] = m;
        meet_table_[b * n + a] = m;
      }
    }
  });
  return meet_table_[x * n + y];
}

std::shared_ptr<ExplicitLattice> complete_with_bottom(const ExplicitPoset& s) {
  ValidationReport report = validate_join_semilattice(s);
  if (!report.ok()) throw InputNotJoinSemilattice(report.summary());

  // A unique minimum makes the semilattice a lattice already: every pair
  // then has a nonempty lower-bound set whose join is the meet.
  for (Element x = 0; x < s.size(); ++x) {
    if (s.up(x).count() == s.size()) {
      ExplicitPoset copy = s;
      assert(validate_lattice(copy).ok());
      return ExplicitLattice::from_poset(std::move(copy));
    }
  }

  auto name_taken = [&s](const std::string& candidate) {
    for (Element x = 0; x < s.size(); ++x) {
      if (s.name(x) == candidate) return true;
    }
    return false;
  };
  std::string bottom_name = "bot";
  while (name_taken(bottom_name)) bottom_name += "_";

  ExplicitPoset extended = s;
  extended.append_bottom(bottom_name);
  assert(validate_lattice(extended).ok());
  return ExplicitLattice::from_poset(std::move(extended));
}

Element meet_via_join(const Lattice& s, std::span<const Element> xs) {
  if (xs.empty()) throw Error("meet_via_join: element set must be nonempty");
  Element acc = s.bottom();
  for (Element y = 0; y < s.size(); ++y) {
    bool lower_bound = true;
    for (Element x : xs) {
      if (!s.leq(y, x)) {
        lower_bound = false;
        break;
      }
    }
    if (lower_bound) acc = s.join(acc, y);
  }
  return acc;
}

}  // namespace hasse
