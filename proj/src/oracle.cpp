#include "hasse/oracle.hpp"

#include <algorithm>
#include <queue>
#include <random>

#include "hasse/bits.hpp"
#include "hasse/embedding.hpp"

namespace hasse {
namespace {

struct OrderMatrix {
  std::vector<Bitset> up;    // up[x] = {y : x <= y}
  std::vector<Bitset> down;  // transpose

  explicit OrderMatrix(const Lattice& l) {
    const std::size_t n = l.size();
    up.assign(n, Bitset(n));
    down.assign(n, Bitset(n));
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (l.leq(x, y)) {
          up[x].set(y);
          down[y].set(x);
        }
      }
    }
  }
};

}  // namespace

Diagram oracle_hasse(const Lattice& l) {
  const std::size_t n = l.size();
  OrderMatrix m(l);
  Diagram h(n);
  Bitset between(n);
  for (Element x = 0; x < n; ++x) {
    for (auto y = m.up[x].find_first(); y != Bitset::npos; y = m.up[x].find_next(y)) {
      if (y == x) continue;
      between = m.up[x];
      between &= m.down[y];
      between.reset(x);
      between.reset(y);
      if (between.none()) h.add_edge(x, static_cast<Element>(y));
    }
  }
  return h;
}

std::vector<Element> upper_cover(const Lattice& l, Element x) {
  const std::size_t n = l.size();
  std::vector<Element> above;
  for (Element y = 0; y < n; ++y) {
    if (l.lt(x, y)) above.push_back(y);
  }
  std::vector<Element> covers;
  for (Element y : above) {
    bool immediate = true;
    for (Element z : above) {
      if (z != y && l.lt(z, y)) {
        immediate = false;
        break;
      }
    }
    if (immediate) covers.push_back(y);
  }
  return covers;
}

std::vector<Element> lower_cover(const Lattice& l, Element y) {
  const std::size_t n = l.size();
  std::vector<Element> below;
  for (Element x = 0; x < n; ++x) {
    if (l.lt(x, y)) below.push_back(x);
  }
  std::vector<Element> covers;
  for (Element x : below) {
    bool immediate = true;
    for (Element z : below) {
      if (z != x && l.lt(x, z)) {
        immediate = false;
        break;
      }
    }
    if (immediate) covers.push_back(x);
  }
  return covers;
}

namespace {

// Hopcroft-Karp on the bipartite strict-order graph. A matched pair (x, y)
// chains x below y; n - matching = minimum chain cover = width.
class StrictOrderMatching {
 public:
  explicit StrictOrderMatching(const Lattice& l) : n_(l.size()), adj_(n_) {
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        if (l.lt(x, y)) adj_[x].push_back(y);
      }
    }
  }

  std::size_t run() {
    match_left_.assign(n_, kFree);
    match_right_.assign(n_, kFree);
    std::size_t matching = 0;
    while (bfs()) {
      for (Element x = 0; x < n_; ++x) {
        if (match_left_[x] == kFree && dfs(x)) ++matching;
      }
    }
    return matching;
  }

 private:
  static constexpr Element kFree = static_cast<Element>(-1);

  bool bfs() {
    std::queue<Element> q;
    dist_.assign(n_, kInf);
    for (Element x = 0; x < n_; ++x) {
      if (match_left_[x] == kFree) {
        dist_[x] = 0;
        q.push(x);
      }
    }
    bool reachable = false;
    while (!q.empty()) {
      Element x = q.front();
      q.pop();
      for (Element y : adj_[x]) {
        Element nx = match_right_[y];
        if (nx == kFree) {
          reachable = true;
        } else if (dist_[nx] == kInf) {
          dist_[nx] = dist_[x] + 1;
          q.push(nx);
        }
      }
    }
    return reachable;
  }

  bool dfs(Element x) {
    for (Element y : adj_[x]) {
      Element nx = match_right_[y];
      if (nx == kFree || (dist_[nx] == dist_[x] + 1 && dfs(nx))) {
        match_left_[x] = y;
        match_right_[y] = x;
        return true;
      }
    }
    dist_[x] = kInf;
    return false;
  }

  static constexpr std::uint32_t kInf = static_cast<std::uint32_t>(-1);

  std::size_t n_;
  std::vector<std::vector<Element>> adj_;
  std::vector<Element> match_left_, match_right_;
  std::vector<std::uint32_t> dist_;
};

}  // namespace

std::size_t width(const Lattice& l) {
  if (l.size() == 0) return 0;
  StrictOrderMatching matching(l);
  return l.size() - matching.run();
}

std::size_t max_antichain_exhaustive(const Lattice& l) {
  const std::size_t n = l.size();
  if (n > 20) throw ParameterTooLarge("exhaustive antichain search capped at n = 20");
  std::vector<std::uint32_t> comparable(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x != y && (l.leq(x, y) || l.leq(y, x))) comparable[x] |= (1u << y);
    }
  }
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool antichain = true;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      unsigned i = static_cast<unsigned>(__builtin_ctz(rest));
      if (s & comparable[i]) {
        antichain = false;
        break;
      }
    }
    if (antichain) best = std::max<std::size_t>(best, __builtin_popcount(s));
  }
  return best;
}

DistributivityResult is_distributive(const Lattice& l) {
  const std::size_t n = l.size();
  constexpr std::size_t kTableLimit = 2048;
  DistributivityResult result;
  if (n <= kTableLimit) {
    std::vector<std::uint16_t> jt(n * n), mt(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        jt[a * n + b] = static_cast<std::uint16_t>(l.join(a, b));
        mt[a * n + b] = static_cast<std::uint16_t>(l.meet(a, b));
      }
    }
    for (Element x = 0; x < n; ++x) {
      const std::uint16_t* mx = mt.data() + x * n;
      for (Element y = 0; y < n; ++y) {
        const std::uint16_t* jy = jt.data() + y * n;
        const std::uint16_t mxy = mx[y];
        for (Element z = 0; z < n; ++z) {
          if (mx[jy[z]] != jt[mxy * n + mx[z]]) {
            return {false, x, y, z};
          }
        }
      }
    }
    return result;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          return {false, x, y, z};
        }
      }
    }
  }
  return result;
}

namespace {

void check_pair_laws(const Lattice& l, Element x, Element y, ValidationReport& report) {
  auto names = [&l](std::initializer_list<Element> es) {
    std::vector<std::string> out;
    for (Element e : es) out.push_back(l.name(e));
    return out;
  };
  Element j = l.join(x, y);
  Element m = l.meet(x, y);
  if (l.join(y, x) != j) {
    report.fail("join-commutative", names({x, y}), "");
    return;
  }
  if (l.meet(y, x) != m) {
    report.fail("meet-commutative", names({x, y}), "");
    return;
  }
  if (!l.leq(x, j) || !l.leq(y, j)) {
    report.fail("join-upper-bound", names({x, y}), "join is not above both arguments");
    return;
  }
  if (!l.leq(m, x) || !l.leq(m, y)) {
    report.fail("meet-lower-bound", names({x, y}), "meet is not below both arguments");
    return;
  }
  // join is the least upper bound, meet the greatest lower bound.
  for (Element z = 0; z < l.size(); ++z) {
    if (l.leq(x, z) && l.leq(y, z) && !l.leq(j, z)) {
      report.fail("lub-least", names({x, y, z}), "smaller upper bound than join exists");
      return;
    }
    if (l.leq(z, x) && l.leq(z, y) && !l.leq(m, z)) {
      report.fail("glb-greatest", names({x, y, z}), "larger lower bound than meet exists");
      return;
    }
  }
  if (l.meet(x, j) != x || l.join(x, m) != x) {
    report.fail("absorption", names({x, y}), "");
    return;
  }
  const bool rel = l.leq(x, y);
  if (rel != (j == y) || rel != (m == x)) {
    report.fail("order-consistency", names({x, y}),
                "x <= y, join(x,y) = y and meet(x,y) = x must agree");
  }
}

void check_triple_laws(const Lattice& l, Element x, Element y, Element z,
                       ValidationReport& report) {
  if (l.join(l.join(x, y), z) != l.join(x, l.join(y, z))) {
    report.fail("join-associative", {l.name(x), l.name(y), l.name(z)}, "");
    return;
  }
  if (l.meet(l.meet(x, y), z) != l.meet(x, l.meet(y, z))) {
    report.fail("meet-associative", {l.name(x), l.name(y), l.name(z)}, "");
  }
}

void check_element_laws(const Lattice& l, Element x, ValidationReport& report) {
  if (!l.leq(x, x)) {
    report.fail("reflexive", {l.name(x)}, "");
    return;
  }
  if (l.join(x, x) != x || l.meet(x, x) != x) {
    report.fail("idempotent", {l.name(x)}, "");
    return;
  }
  if (!l.leq(x, l.top()) || !l.leq(l.bottom(), x)) {
    report.fail("bounds", {l.name(x)}, "element not between bottom and top");
  }
}

}  // namespace

ValidationReport check_lattice_axioms(const Lattice& l) {
  ValidationReport report;
  const std::size_t n = l.size();
  if (n == 0) {
    report.fail("nonempty", {}, "a lattice needs at least one element");
    return report;
  }
  for (Element x = 0; x < n && report.ok(); ++x) check_element_laws(l, x, report);
  for (Element x = 0; x < n && report.ok(); ++x) {
    for (Element y = 0; y < n && report.ok(); ++y) {
      if (x != y && l.leq(x, y) && l.leq(y, x)) {
        report.fail("antisymmetry", {l.name(x), l.name(y)}, "");
        break;
      }
      check_pair_laws(l, x, y, report);
    }
  }
  for (Element x = 0; x < n && report.ok(); ++x) {
    for (Element y = 0; y < n && report.ok(); ++y) {
      if (!l.leq(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (l.leq(y, z) && !l.leq(x, z)) {
          report.fail("transitive", {l.name(x), l.name(y), l.name(z)}, "");
          break;
        }
      }
    }
  }
  for (Element x = 0; x < n && report.ok(); ++x) {
    for (Element y = 0; y < n && report.ok(); ++y) {
      for (Element z = 0; z < n && report.ok(); ++z) check_triple_laws(l, x, y, z, report);
    }
  }
  return report;
}

ValidationReport check_lattice_axioms_sampled(const Lattice& l, std::size_t samples,
                                              std::uint64_t seed) {
  ValidationReport report;
  const std::size_t n = l.size();
  if (n == 0) {
    report.fail("nonempty", {}, "a lattice needs at least one element");
    return report;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < samples && report.ok(); ++i) {
    Element x = pick(rng), y = pick(rng), z = pick(rng);
    check_element_laws(l, x, report);
    if (!report.ok()) break;
    check_pair_laws(l, x, y, report);
    if (!report.ok()) break;
    check_triple_laws(l, x, y, z, report);
    if (!report.ok()) break;
    if (l.leq(x, y) && l.leq(y, z) && !l.leq(x, z)) {
      report.fail("transitive", {l.name(x), l.name(y), l.name(z)}, "");
    }
  }
  return report;
}

ValidationReport check_paper_laws(const Lattice& l, const Embedding* emb, std::uint64_t seed) {
  ValidationReport report;
  const std::size_t n = l.size();
  const bool exhaustive = n <= 64;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, n > 0 ? static_cast<Element>(n - 1) : 0);
  constexpr std::size_t kSamples = 10'000;

  Diagram h = oracle_hasse(l);

  // Two distinct lower covers of y join back to y.
  auto check_twoprecs = [&](Element y) {
    const auto& lc = h.lower_covers(y);
    for (std::size_t i = 0; i < lc.size(); ++i) {
      for (std::size_t j = i + 1; j < lc.size(); ++j) {
        if (l.join(lc[i], lc[j]) != y) {
          report.fail("two-lower-covers-join", {l.name(lc[i]), l.name(lc[j]), l.name(y)},
                      "distinct lower covers must join to the covered element");
          return;
        }
      }
    }
  };

  // For x < y there is a cover immediately above x below y, and one
  // immediately below y above x.
  auto check_covers = [&](Element x, Element y) {
    if (!l.lt(x, y)) return;
    bool up_ok = false;
    for (Element z : h.upper_covers(x)) {
      if (l.leq(z, y)) {
        up_ok = true;
        break;
      }
    }
    bool down_ok = false;
    for (Element z : h.lower_covers(y)) {
      if (l.leq(x, z)) {
        down_ok = true;
        break;
      }
    }
    if (!up_ok || !down_ok) {
      report.fail("cover-step", {l.name(x), l.name(y)},
                  "no cover step between comparable elements");
    }
  };

  if (exhaustive) {
    for (Element y = 0; y < n && report.ok(); ++y) check_twoprecs(y);
    for (Element x = 0; x < n && report.ok(); ++x) {
      for (Element y = 0; y < n && report.ok(); ++y) check_covers(x, y);
    }
  } else {
    for (std::size_t i = 0; i < kSamples && report.ok(); ++i) check_twoprecs(pick(rng));
    for (std::size_t i = 0; i < kSamples && report.ok(); ++i) check_covers(pick(rng), pick(rng));
  }

  if (emb != nullptr && report.ok()) {
    // f(meet of Y) <= meet of f(Y) on random subsets Y.
    const Lattice& lp = emb->codomain();
    std::uniform_int_distribution<std::size_t> pick_size(0, std::min<std::size_t>(n, 10));
    for (std::size_t draw = 0; draw < 1000 && report.ok(); ++draw) {
      std::size_t sz = pick_size(rng);
      std::vector<Element> subset;
      subset.reserve(sz);
      for (std::size_t i = 0; i < sz; ++i) subset.push_back(pick(rng));
      Element meet_l = l.top();
      Element meet_lp = lp.top();
      for (Element e : subset) {
        meet_l = l.meet(meet_l, e);
        meet_lp = lp.meet(meet_lp, (*emb)(e));
      }
      if (!lp.leq((*emb)(meet_l), meet_lp)) {
        std::vector<std::string> witness;
        for (Element e : subset) witness.push_back(l.name(e));
        report.fail("homomorphism-meet-bound", witness,
                    "f(meet of Y) must stay below the meet of f(Y)");
      }
    }
  }
  return report;
}

std::vector<Element> meet_irreducibles(const Lattice& l, const Diagram& hasse) {
  std::vector<Element> out;
  for (Element x = 0; x < l.size(); ++x) {
    if (hasse.upper_covers(x).size() == 1) out.push_back(x);
  }
  return out;
}

}  // namespace hasse
