#include "hasse/zoo.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hasse {
namespace {

using Mask = std::uint64_t;

std::string set_name(Mask mask, const std::vector<std::string>& attr_names) {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; i < attr_names.size(); ++i) {
    if (mask & (Mask{1} << i)) {
      if (!first) out += ",";
      out += attr_names[i];
      first = false;
    }
  }
  out += "}";
  return out;
}

}  // namespace

std::vector<std::string> default_attribute_names(unsigned k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (unsigned i = 0; i < k; ++i) {
    std::string name;
    unsigned v = i;
    if (v < 26) {
      name = std::string(1, static_cast<char>('a' + v));
    } else {
      v -= 26;
      name = std::string(1, static_cast<char>('a' + v / 26));
      name += static_cast<char>('a' + v % 26);
    }
    names.push_back(std::move(name));
  }
  return names;
}

PowersetLattice::PowersetLattice(unsigned k, Orientation orientation,
                                 std::vector<std::string> attr_names)
    : k_(k), orientation_(orientation), attr_names_(std::move(attr_names)) {
  if (k > 62) throw ParameterTooLarge("powerset attribute count above 62");
  if (attr_names_.empty()) attr_names_ = default_attribute_names(k);
  assert(attr_names_.size() == k);
}

Element PowersetLattice::top() const {
  Mask full = (k_ == 0) ? 0 : ((Mask{1} << k_) - 1);
  return orientation_ == Orientation::standard ? static_cast<Element>(full) : 0;
}

Element PowersetLattice::bottom() const {
  Mask full = (k_ == 0) ? 0 : ((Mask{1} << k_) - 1);
  return orientation_ == Orientation::standard ? 0 : static_cast<Element>(full);
}

bool PowersetLattice::leq(Element x, Element y) const {
  return orientation_ == Orientation::standard ? (x & ~y) == 0 : (y & ~x) == 0;
}

Element PowersetLattice::join(Element x, Element y) const {
  return orientation_ == Orientation::standard ? (x | y) : (x & y);
}

Element PowersetLattice::meet(Element x, Element y) const {
  return orientation_ == Orientation::standard ? (x & y) : (x | y);
}

std::string PowersetLattice::name(Element x) const { return set_name(x, attr_names_); }

DivisorLattice::DivisorLattice(std::int64_t n) : n_(n) {
  if (n < 1) throw Error("divisor lattice needs n >= 1");
  if (n > 1'000'000) throw ParameterTooLarge("divisor lattice capped at n = 1000000");
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divisors_.push_back(d);
      if (d != n / d) divisors_.push_back(n / d);
    }
  }
  std::sort(divisors_.begin(), divisors_.end());
  for (Element i = 0; i < divisors_.size(); ++i) index_[divisors_[i]] = i;
}

Element DivisorLattice::index_of(std::int64_t d) const {
  auto it = index_.find(d);
  assert(it != index_.end());
  return it->second;
}

Element DivisorLattice::join(Element x, Element y) const {
  return index_of(std::lcm(divisors_[x], divisors_[y]));
}

Element DivisorLattice::meet(Element x, Element y) const {
  return index_of(std::gcd(divisors_[x], divisors_[y]));
}

PartitionLattice::PartitionLattice(unsigned k) : k_(k) {
  if (k > 6) throw ParameterTooLarge("partition lattice capped at a 6-element ground set");
  // Enumerate restricted growth strings in lexicographic order.
  std::vector<std::uint8_t> rgs(k, 0);
  auto emit = [this](const std::vector<std::uint8_t>& s) {
    std::string key(s.begin(), s.end());
    index_[key] = static_cast<Element>(rgs_.size());
    rgs_.push_back(s);
  };
  if (k == 0) {
    emit({});
    return;
  }
  auto rec = [&](auto&& self, unsigned pos, std::uint8_t max_label) -> void {
    if (pos == k) {
      emit(rgs);
      return;
    }
    for (std::uint8_t label = 0; label <= max_label + 1 && label <= pos; ++label) {
      rgs[pos] = label;
      self(self, pos + 1, std::max<std::uint8_t>(max_label, label));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
}

std::vector<std::uint8_t> PartitionLattice::canonical(std::vector<std::uint8_t> labels) {
  std::vector<int> remap(256, -1);  // meet uses pair-encoded labels up to k*k
  std::uint8_t next = 0;
  for (auto& l : labels) {
    if (remap[l] < 0) remap[l] = next++;
    l = static_cast<std::uint8_t>(remap[l]);
  }
  return labels;
}

Element PartitionLattice::index_of(const std::vector<std::uint8_t>& rgs) const {
  auto it = index_.find(std::string(rgs.begin(), rgs.end()));
  assert(it != index_.end());
  return it->second;
}

bool PartitionLattice::leq(Element x, Element y) const {
  // x refines y: elements sharing a block in x must share one in y.
  const auto& a = rgs_[x];
  const auto& b = rgs_[y];
  std::vector<int> block_image(k_, -1);
  for (unsigned i = 0; i < k_; ++i) {
    int& img = block_image[a[i]];
    if (img < 0) {
      img = b[i];
    } else if (img != b[i]) {
      return false;
    }
  }
  return true;
}

Element PartitionLattice::join(Element x, Element y) const {
  // Union-find over the ground set: merge within the blocks of both inputs.
  std::vector<std::uint8_t> parent(k_);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&parent](std::uint8_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto unite = [&](std::uint8_t i, std::uint8_t j) { parent[root(i)] = root(j); };
  for (const auto* part : {&rgs_[x], &rgs_[y]}) {
    std::vector<int> first_of_block(k_, -1);
    for (unsigned i = 0; i < k_; ++i) {
      int& first = first_of_block[(*part)[i]];
      if (first < 0) {
        first = static_cast<int>(i);
      } else {
        unite(static_cast<std::uint8_t>(first), static_cast<std::uint8_t>(i));
      }
    }
  }
  std::vector<std::uint8_t> labels(k_);
  for (unsigned i = 0; i < k_; ++i) labels[i] = root(static_cast<std::uint8_t>(i));
  return index_of(canonical(std::move(labels)));
}

Element PartitionLattice::meet(Element x, Element y) const {
  // Common refinement: block identity is the pair of input block labels.
  const auto& a = rgs_[x];
  const auto& b = rgs_[y];
  std::vector<std::uint8_t> labels(k_);
  for (unsigned i = 0; i < k_; ++i) {
    labels[i] = static_cast<std::uint8_t>(a[i] * k_ + b[i]);
  }
  return index_of(canonical(std::move(labels)));
}

std::string PartitionLattice::name(Element x) const {
  if (k_ == 0) return "{}";
  const auto& s = rgs_[x];
  std::uint8_t max_label = *std::max_element(s.begin(), s.end());
  std::string out;
  for (std::uint8_t block = 0; block <= max_label; ++block) {
    if (block > 0) out += "/";
    for (unsigned i = 0; i < k_; ++i) {
      if (s[i] == block) out += static_cast<char>('1' + i);
    }
  }
  return out;
}

namespace {

std::shared_ptr<ExplicitLattice> fixture_from_covers(
    std::vector<std::string> names, std::vector<std::pair<std::string, std::string>> covers) {
  return ExplicitLattice::build(make_relation(std::move(names), covers, RelationKind::covers));
}

}  // namespace

std::shared_ptr<ExplicitLattice> fixture_fig1a() {
  return fixture_from_covers({"top", "1", "2", "3", "bot"},
                             {{"1", "top"},
                              {"2", "top"},
                              {"3", "top"},
                              {"bot", "1"},
                              {"bot", "2"},
                              {"bot", "3"}});
}

std::shared_ptr<ExplicitLattice> fixture_fig1b() {
  return fixture_from_covers({"top", "1", "2", "3", "4", "bot"},
                             {{"1", "top"},
                              {"2", "top"},
                              {"3", "top"},
                              {"4", "1"},
                              {"4", "2"},
                              {"bot", "4"},
                              {"bot", "3"}});
}

std::shared_ptr<ExplicitLattice> fixture_fig2() {
  return fixture_from_covers({"top", "1", "2", "3", "4", "bot"},
                             {{"1", "top"},
                              {"2", "top"},
                              {"4", "1"},
                              {"4", "2"},
                              {"3", "2"},
                              {"bot", "4"},
                              {"bot", "3"}});
}

std::shared_ptr<PowersetLattice> powerset(unsigned k, Orientation orientation) {
  if (k > 20) throw ParameterTooLarge("powerset(k) supports k <= 20");
  return std::make_shared<PowersetLattice>(k, orientation);
}

std::shared_ptr<DivisorLattice> divisor(std::int64_t n) {
  return std::make_shared<DivisorLattice>(n);
}

std::shared_ptr<PartitionLattice> partition(unsigned k) {
  return std::make_shared<PartitionLattice>(k);
}

}  // namespace hasse
