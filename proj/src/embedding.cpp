#include "hasse/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hasse/oracle.hpp"
#include "hasse/zoo.hpp"

namespace hasse {

Embedding identity_embedding(std::shared_ptr<const Lattice> l) {
  std::vector<Element> map(l->size());
  std::iota(map.begin(), map.end(), 0);
  return Embedding(std::move(l), std::move(map));
}

Embedding meet_irreducible_embedding(std::shared_ptr<const Lattice> l) {
  Diagram hasse = oracle_hasse(*l);
  std::vector<Element> irr = meet_irreducibles(*l, hasse);
  if (irr.size() > 62) {
    throw ParameterTooLarge("meet-irreducible embedding needs at most 62 irreducibles");
  }
  std::vector<std::string> attr_names;
  attr_names.reserve(irr.size());
  for (Element m : irr) attr_names.push_back(l->name(m));
  auto codomain = std::make_shared<PowersetLattice>(static_cast<unsigned>(irr.size()),
                                                    Orientation::reversed, std::move(attr_names));
  std::vector<Element> map(l->size(), 0);
  for (Element x = 0; x < l->size(); ++x) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < irr.size(); ++i) {
      if (l->leq(x, irr[i])) mask |= (std::uint64_t{1} << i);
    }
    map[x] = static_cast<Element>(mask);
  }
  return Embedding(std::move(codomain), std::move(map));
}

Embedding embedding_by_name(const Lattice& domain, std::shared_ptr<const Lattice> codomain) {
  std::vector<Element> map(domain.size());
  for (Element x = 0; x < domain.size(); ++x) {
    auto target = codomain->find(domain.name(x));
    if (!target) throw Error("embedding_by_name: codomain lacks element " + domain.name(x));
    map[x] = *target;
  }
  return Embedding(std::move(codomain), std::move(map));
}

ValidationReport validate_embedding(const Embedding& emb, const Lattice& domain) {
  ValidationReport report;
  const std::size_t n = domain.size();
  const Lattice& lp = emb.codomain();

  if (emb.domain_size() != n) {
    report.fail("domain-size", {}, "map length differs from the domain size");
    return report;
  }

  // Injectivity over all elements.
  {
    std::vector<std::pair<Element, Element>> images;
    images.reserve(n);
    for (Element x = 0; x < n; ++x) images.emplace_back(emb(x), x);
    std::sort(images.begin(), images.end());
    for (std::size_t i = 1; i < images.size(); ++i) {
      if (images[i].first == images[i - 1].first) {
        report.fail("injective",
                    {domain.name(images[i - 1].second), domain.name(images[i].second)},
                    "two elements share the image " + lp.name(images[i].first));
        return report;
      }
    }
  }

  auto check_join_pair = [&](Element x, Element y) {
    if (emb(domain.join(x, y)) != lp.join(emb(x), emb(y))) {
      report.fail("join-preserving", {domain.name(x), domain.name(y)},
                  "f(x v y) differs from f(x) v f(y)");
      return false;
    }
    return true;
  };
  auto probe_meet_pair = [&](Element x, Element y) {
    if (emb(domain.meet(x, y)) != lp.meet(emb(x), emb(y))) {
      report.note("meet-preserving", {domain.name(x), domain.name(y)},
                  "f(x ^ y) differs from f(x) ^ f(y); join homomorphisms need not extend");
      return false;
    }
    return true;
  };

  if (n <= 64) {
    bool meets_ok = true;
    for (Element x = 0; x < n; ++x) {
      for (Element y = x; y < n; ++y) {
        if (!check_join_pair(x, y)) return report;
        if (meets_ok) meets_ok = probe_meet_pair(x, y);  // first witness only
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed0c0deull);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    bool meets_ok = true;
    for (std::size_t i = 0; i < 10'000; ++i) {
      Element x = pick(rng), y = pick(rng);
      if (!check_join_pair(x, y)) return report;
      if (meets_ok && i < 1'000) meets_ok = probe_meet_pair(x, y);
    }
  }

  if (emb(domain.bottom()) != lp.bottom()) {
    report.fail("bottom-preserving", {domain.name(domain.bottom())},
                "f(bottom) must be the codomain bottom");
    return report;
  }

  DistributivityResult dist = is_distributive(lp);
  if (!dist.distributive) {
    report.fail("codomain-distributive", {lp.name(dist.x), lp.name(dist.y), lp.name(dist.z)},
                "codomain fails meet-over-join at the witness triple");
  }
  return report;
}

}  // namespace hasse
