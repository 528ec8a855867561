#include "gengraph/structure.hpp"

#include "gengraph/errors.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace gengraph {

std::uint64_t NilpotentStructure::order() const {
  std::uint64_t n = 1;
  for (auto [p, a] : cyclicSylow) n *= ipow(p, a);
  for (auto [q, b] : noncyclicSylow) n *= ipow(q, b);
  return n;
}

std::uint64_t NilpotentStructure::frattini_order() const {
  std::uint64_t f = 1;
  for (auto [p, a] : cyclicSylow) f *= ipow(p, a - 1);
  for (auto [q, b] : noncyclicSylow) f *= ipow(q, b - 2);
  return f;
}

std::uint64_t NilpotentStructure::cyclic_radical() const {
  std::uint64_t r = 1;
  for (auto [p, a] : cyclicSylow) r *= p;
  return r;
}

namespace {

struct BitsetHash {
  std::size_t operator()(const boost::dynamic_bitset<>& b) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto i = b.find_first(); i != boost::dynamic_bitset<>::npos; i = b.find_next(i))
      h = (h ^ i) * 1099511628211ULL;
    return h;
  }
};

bool is_prime_power_of(std::uint64_t x, std::uint64_t p) {
  while (x % p == 0) x /= p;
  return x == 1;
}

}  // namespace

std::vector<ElementSet> subgroup_lattice(const Group& g, std::size_t maxOrder) {
  const std::size_t n = g.order();
  if (n > maxOrder)
    throw GroupError("subgroup lattice: order " + std::to_string(n) + " exceeds guard " + std::to_string(maxOrder));

  struct Node {
    ElementSet set;
    std::vector<Elem> gens;
  };
  std::vector<Node> nodes;
  std::unordered_set<boost::dynamic_bitset<>, BitsetHash> known;
  auto add = [&](ElementSet s, std::vector<Elem> gens) {
    if (known.insert(s.mask()).second) nodes.push_back({std::move(s), std::move(gens)});
  };

  add(closure(g, std::span<const Elem>{}), {});
  std::vector<std::size_t> cyclic;  // node indices of the cyclic subgroups
  for (Elem x = 1; x < n; ++x) {
    Elem one[1] = {x};
    auto c = closure(g, one);
    if (known.insert(c.mask()).second) {
      cyclic.push_back(nodes.size());
      nodes.push_back({std::move(c), {x}});
    }
  }
  const std::vector<Node> cyclicNodes = [&] {
    std::vector<Node> v;
    for (auto i : cyclic) v.push_back(nodes[i]);
    return v;
  }();

  // Every subgroup is a join of cyclic subgroups, so joining each subgroup with
  // each cyclic subgroup saturates the lattice.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& c : cyclicNodes) {
      if (c.set.is_subset_of(nodes[i].set)) continue;
      std::vector<Elem> gens = nodes[i].gens;
      gens.push_back(c.gens.front());
      auto joined = closure(g, gens);
      add(std::move(joined), std::move(gens));
    }
  }
  std::vector<ElementSet> out;
  out.reserve(nodes.size());
  for (auto& nd : nodes) out.push_back(std::move(nd.set));
  return out;
}

ElementSet frattini(const Group& g, FrattiniMethod method, std::size_t maxOrder) {
  const std::size_t n = g.order();
  if (method == FrattiniMethod::NilpotentFormula) {
    if (!is_nilpotent(g)) throw NotNilpotent();
    const std::uint64_t rad = radical(n);
    std::vector<Elem> seeds;
    for (Elem x = 0; x < n; ++x) {
      seeds.push_back(g.power(x, rad));
      for (Elem y = x + 1; y < n; ++y) seeds.push_back(g.commutator(x, y));
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return closure(g, seeds);
  }

  auto lattice = subgroup_lattice(g, maxOrder);
  ElementSet phi(n);
  for (Elem x = 0; x < n; ++x) phi.insert(x);
  bool anyMaximal = false;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& h = lattice[i];
    if (h.size() == n) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < lattice.size() && maximal; ++j) {
      const auto& k = lattice[j];
      if (j != i && k.size() != n && k.size() > h.size() && h.is_subset_of(k)) maximal = false;
    }
    if (!maximal) continue;
    anyMaximal = true;
    auto mask = phi.mask() & h.mask();
    ElementSet next(n);
    for (auto e = mask.find_first(); e != boost::dynamic_bitset<>::npos; e = mask.find_next(e))
      next.insert(static_cast<Elem>(e));
    phi = std::move(next);
  }
  if (!anyMaximal) {  // trivial group
    phi = ElementSet(n);
    phi.insert(0);
  }
  phi.mark_closed();
  return phi;
}

bool is_nilpotent(const Group& g) {
  try {
    (void)sylow_subgroups(g);
    return true;
  } catch (const NotNilpotent&) {
    return false;
  }
}

std::vector<std::pair<std::uint64_t, ElementSet>> sylow_subgroups(const Group& g) {
  const std::size_t n = g.order();
  std::vector<std::pair<std::uint64_t, ElementSet>> out;
  std::uint64_t product = 1;
  for (auto [p, a] : factorize(n)) {
    ElementSet s(n);
    std::vector<Elem> members;
    for (Elem x = 0; x < n; ++x)
      if (is_prime_power_of(g.element_order(x), p)) {
        s.insert(x);
        members.push_back(x);
      }
    for (Elem x : members)
      for (Elem y : members)
        if (!s.contains(g.mul(x, y))) throw NotNilpotent();
    if (members.size() != ipow(p, a)) throw NotNilpotent();
    product *= members.size();
    s.mark_closed();
    out.emplace_back(p, std::move(s));
  }
  if (product != n) throw NotNilpotent();
  return out;
}

Elem sylow_component(const Group& g, Elem x, std::uint64_t p) {
  const std::uint64_t n = g.order();
  std::uint64_t pa = 1;
  while (n % (pa * p) == 0) pa *= p;
  const std::uint64_t m = n / pa;
  // k = 1 mod p^a and k = 0 mod m.
  std::uint64_t k = 0;
  for (std::uint64_t t = 0; t < pa; ++t)
    if ((m * t) % pa == 1 % pa) {
      k = m * t;
      break;
    }
  return g.power(x, k);
}

NilpotentStructure nilpotent_structure(const Group& g) {
  NilpotentStructure ns;
  for (const auto& [p, set] : sylow_subgroups(g)) {
    const std::size_t size = set.size();
    unsigned a = 0;
    for (std::size_t t = size; t > 1; t /= p) ++a;
    bool cyc = false;
    for (Elem x : set.elements())
      if (g.element_order(x) == size) cyc = true;
    (cyc ? ns.cyclicSylow : ns.noncyclicSylow).emplace_back(p, a);
  }
  ns.twoGenerated = is_two_generated(g);
  return ns;
}

Quotient quotient(const Group& g, const ElementSet& normal) {
  const std::size_t n = g.order();
  const auto members = normal.elements();
  if (members.empty() || members.front() != 0 || n % members.size() != 0)
    throw PreconditionError("quotient: not a subgroup");
  for (Elem x = 0; x < n; ++x)
    for (Elem h : members)
      if (!normal.contains(g.mul(g.mul(g.inverse(x), h), x))) throw PreconditionError("quotient: subgroup is not normal");

  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> cosetOf(n, kUnset);
  std::vector<Elem> section;
  for (Elem x = 0; x < n; ++x) {
    if (cosetOf[x] != kUnset) continue;
    const auto c = static_cast<Elem>(section.size());
    section.push_back(x);
    for (Elem h : members) cosetOf[g.mul(x, h)] = c;
  }
  const std::size_t m = section.size();
  std::vector<Elem> table(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels[a] = "[" + g.label(section[a]) + "]";
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = cosetOf[g.mul(section[a], section[b])];
  }
  return Quotient{Group::from_table(std::move(table), std::move(labels)), normal, std::move(cosetOf), std::move(section)};
}

Quotient quotient_mod_frattini(const Group& g, std::size_t maxOrder) {
  const auto method = is_nilpotent(g) ? FrattiniMethod::NilpotentFormula : FrattiniMethod::Lattice;
  return quotient(g, frattini(g, method, maxOrder));
}

std::vector<std::uint64_t> abelian_invariants(const Group& g) {
  if (!g.is_abelian()) throw PreconditionError("abelian_invariants: group is not abelian");
  std::vector<std::uint64_t> out;
  const std::size_t n = g.order();
  for (auto [p, a] : factorize(n)) {
    // c[k] = #{x : x^(p^k) = 1} = p^(sum_i min(k, e_i)).
    std::vector<unsigned> logc{0};
    for (unsigned k = 1; k <= a; ++k) {
      const std::uint64_t pk = ipow(p, k);
      std::size_t c = 0;
      for (Elem x = 0; x < n; ++x)
        if (pk % g.element_order(x) == 0) ++c;
      unsigned l = 0;
      for (std::size_t t = c; t > 1; t /= p) ++l;
      logc.push_back(l);
    }
    // atLeast[k] = number of invariants with exponent >= k.
    std::map<unsigned, unsigned, std::greater<>> counts;
    for (unsigned k = 1; k <= a; ++k) {
      unsigned atLeastK = logc[k] - logc[k - 1];
      unsigned atLeastNext = k < a ? logc[k + 1] - logc[k] : 0;
      if (atLeastK > atLeastNext) counts[k] = atLeastK - atLeastNext;
    }
    for (auto [e, c] : counts)
      for (unsigned i = 0; i < c; ++i) out.push_back(ipow(p, e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gengraph
