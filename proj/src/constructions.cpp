#include "gengraph/constructions.hpp"

#include "gengraph/cycles.hpp"
#include "gengraph/errors.hpp"
#include "gengraph/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gengraph {

std::vector<Vertex> to_vertices(const GeneratingGraph& graph, std::span<const Elem> elements, std::size_t groupOrder) {
  const auto index = graph.vertex_of(groupOrder);
  std::vector<Vertex> out;
  out.reserve(elements.size());
  for (Elem e : elements) {
    if (e >= groupOrder || index[e] < 0) throw PreconditionError("element " + std::to_string(e) + " is not a vertex");
    out.push_back(static_cast<Vertex>(index[e]));
  }
  return out;
}

namespace {

Elem least_generator(const Group& g) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return x;
  throw PreconditionError("group is not cyclic");
}

std::vector<Elem> powers(const Group& g, Elem x) {
  std::vector<Elem> out{0};
  for (Elem y = x; y != 0; y = g.mul(y, x)) out.push_back(y);
  return out;
}

bool cycle_in_delta(const Group& g, const GeneratingGraph& delta, std::span<const Elem> cycle) {
  try {
    return is_hamiltonian_cycle(delta.graph, to_vertices(delta, cycle, g.order()));
  } catch (const PreconditionError&) {
    return false;
  }
}

std::uint64_t single_prime(const Group& p) {
  const auto f = factorize(p.order());
  if (f.size() != 1) throw PreconditionError("not a p-group");
  return f.front().first;
}

// H_i = (b^t f_i, a^t f_i, a^t b f_i, ..., a^t b^{p-1} f_i) for t = 1..p-1.
std::vector<std::vector<Elem>> pgroup_paths(const Group& g, Elem a, Elem b, std::uint64_t p) {
  const auto phi = frattini(g, FrattiniMethod::NilpotentFormula).elements();
  std::vector<std::vector<Elem>> paths;
  for (Elem f : phi) {
    std::vector<Elem> h;
    for (std::uint64_t t = 1; t < p; ++t) {
      const Elem at = g.power(a, t);
      h.push_back(g.mul(g.power(b, t), f));
      for (std::uint64_t u = 0; u < p; ++u) h.push_back(g.mul(g.mul(at, g.power(b, u)), f));
    }
    paths.push_back(std::move(h));
  }
  return paths;
}

std::vector<Elem> search_cycle(const GeneratingGraph& delta, SearchBudget budget, Outcome& outcome,
                               std::uint64_t& nodes) {
  auto r = hamiltonian(delta.graph, budget);
  outcome = r.outcome;
  nodes = r.nodes;
  std::vector<Elem> out;
  if (r.cycle)
    for (Vertex v : r.cycle->order) out.push_back(delta.vertexElements[v]);
  return out;
}

}  // namespace

std::vector<Elem> cyclic_hamiltonian(std::size_t n) {
  if (n < 3) throw PreconditionError("cyclic Hamiltonian cycle needs n >= 3");
  return cyclic_hamiltonian(cyclic_group(n));
}

std::vector<Elem> cyclic_hamiltonian(const Group& g) {
  if (g.order() < 3) throw PreconditionError("cyclic Hamiltonian cycle needs order >= 3");
  auto cycle = powers(g, least_generator(g));
  if (!cycle_in_delta(g, delta_graph(g), cycle)) throw InternalMismatch("cyclic cycle failed re-verification");
  return cycle;
}

PGroupCycle pgroup_hamiltonian(const Group& g, Elem a, Elem b, SearchBudget budget) {
  const auto p = single_prime(g);
  if (g.is_cyclic()) throw PreconditionError("p-group construction needs a noncyclic group");
  if (!is_generating_pair(g, a, b)) throw PreconditionError("pair does not generate");

  PGroupCycle out;
  for (auto& h : pgroup_paths(g, a, b, p)) out.cycle.insert(out.cycle.end(), h.begin(), h.end());
  const auto delta = delta_graph(g);
  if (cycle_in_delta(g, delta, out.cycle)) {
    if (p != 2) {
      HWitness w{out.cycle, {1, 3}, {0, 2}};
      HChords chords{HamCycle{to_vertices(delta, w.cycle, g.order())}, w.chordOdd, w.chordEven};
      if (!verify_certificate(delta.graph, chords)) throw InternalMismatch("p-group chords failed re-verification");
      out.witness = std::move(w);
    }
    return out;
  }
  if (p != 2) throw InternalMismatch("p-group cycle failed re-verification");
  Outcome outcome;
  std::uint64_t nodes = 0;
  out.cycle = search_cycle(delta, budget, outcome, nodes);
  out.constructed = false;
  if (outcome != Outcome::Yes) throw InternalMismatch("p-group cycle: construction and search both failed");
  return out;
}

PGroupCycle pgroup_hamiltonian(const Group& g, SearchBudget budget) {
  const auto pair = least_generating_pair(g);
  if (!pair) throw NotTwoGenerated();
  return pgroup_hamiltonian(g, pair->first, pair->second, budget);
}

namespace {

// The cycle K on C2 x P with x^j h mapped through `embed(j mod 2, h)`.
template <typename Embed>
std::vector<Elem> c2_cycle(const Group& p, std::uint64_t prime, Embed embed) {
  const auto pair = least_generating_pair(p);
  if (!pair) throw NotTwoGenerated();
  const auto paths = pgroup_paths(p, pair->first, pair->second, prime);
  std::vector<Elem> cycle;
  for (int part = 0; part < 2; ++part)
    for (const auto& h : paths) {
      const std::size_t k = h.size();
      for (std::size_t t = 0; t < k; ++t) cycle.push_back(embed((t + 1) % 2, h[part == 0 ? t : (t + 3) % k]));
    }
  return cycle;
}

}  // namespace

ProductCycle c2_times_p_hamiltonian(const Group& p) {
  const auto prime = single_prime(p);
  if (prime == 2) throw PreconditionError("C2 x P construction needs an odd prime");
  std::vector<Group> factors{cyclic_group(2), p};
  ProductCycle out{direct_product(factors), {}};
  const Group& g = out.group;
  const auto np = static_cast<Elem>(p.order());
  if (p.is_cyclic()) {
    out.cycle = powers(g, np + least_generator(p));
  } else {
    out.cycle = c2_cycle(p, prime, [np](std::size_t j, Elem h) { return static_cast<Elem>(j * np + h); });
  }
  if (!cycle_in_delta(g, delta_graph(g), out.cycle)) throw InternalMismatch("C2 x P cycle failed re-verification");
  return out;
}

HMembership h_membership(const Graph& g, const HamCycle& cycle) {
  if (!is_hamiltonian_cycle(g, cycle.order)) throw PreconditionError("not a Hamiltonian cycle of the graph");
  HMembership m;
  const std::size_t n = cycle.order.size();
  if (n % 2 == 1) {
    m.member = true;
    return m;
  }
  std::optional<std::pair<std::size_t, std::size_t>> odd, even;
  for (std::size_t i = 0; i < n && !(odd && even); ++i)
    for (std::size_t j = i + 2; j < n; j += 2) {
      if (j - i == n - 1 || !g.adjacent(cycle.order[i], cycle.order[j])) continue;
      auto& slot = i % 2 ? odd : even;
      if (!slot) slot = std::pair{i, j};
      break;
    }
  if (odd && even) {
    m.member = true;
    m.witness = HChords{cycle, *odd, *even};
  }
  return m;
}

NilpotentCycle nilpotent_hamiltonian(const Group& g, SearchBudget budget) {
  NilpotentCycle out;
  if (g.order() < 3) {
    out.reason = g.order() == 2 ? "Delta(C2) is K2" : "Delta of the trivial group is empty";
    return out;
  }
  const auto ns = nilpotent_structure(g);
  if (!ns.twoGenerated) throw NotTwoGenerated();
  const auto delta = delta_graph(g);
  const auto primes = factorize(g.order());

  if (g.is_cyclic()) {
    out.method = "cyclic";
    out.cycle = cyclic_hamiltonian(g);
  } else if (primes.size() == 1) {
    auto pc = pgroup_hamiltonian(g, budget);
    out.method = pc.constructed ? "p-group" : "search";
    out.cycle = std::move(pc.cycle);
  } else if (primes.size() == 2 && primes[0] == PrimePower{2, 1}) {
    out.method = "c2-times-p";
    const auto sylow = sylow_subgroups(g);
    const Elem x = sylow[0].second.elements().at(1);
    const auto sp = induced_subgroup(g, sylow[1].second);
    out.cycle = c2_cycle(sp.group, primes[1].first, [&](std::size_t j, Elem h) {
      return j ? g.mul(x, sp.embedding[h]) : sp.embedding[h];
    });
  } else {
    out.method = "search";
    out.cycle = search_cycle(delta, budget, out.outcome, out.nodes);
    if (out.outcome != Outcome::Yes) {
      out.reason = out.outcome == Outcome::No ? "search space exhausted" : "node budget exhausted";
      return out;
    }
  }
  if (!cycle_in_delta(g, delta, out.cycle)) throw InternalMismatch(out.method + " cycle failed re-verification");
  out.outcome = Outcome::Yes;
  return out;
}

CliqueColouring cyclic_clique_colouring(std::size_t n) {
  if (n < 2) throw PreconditionError("clique colouring needs n >= 2");
  const auto profile = totient_profile(n);
  CliqueColouring cc;
  std::vector<Elem> generators;
  for (Elem k = 0; k < n; ++k)
    if (std::gcd<std::uint64_t, std::uint64_t>(k, n) == 1) generators.push_back(k);
  cc.clique = generators;
  const std::size_t r = profile.factorization.size();
  for (auto [p, e] : profile.factorization) cc.clique.push_back(static_cast<Elem>(p % n));

  // Class i - 1 for i = 1..r: <g^{p_i}> minus the earlier <g^{p_j}>; then one
  // class per generator.
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  cc.colour.assign(n, kUnset);
  for (std::size_t i = 0; i < r; ++i) {
    const auto p = profile.factorization[i].first;
    for (Elem k = 0; k < n; k += static_cast<Elem>(p))
      if (cc.colour[k] == kUnset) cc.colour[k] = i;
  }
  for (std::size_t i = 0; i < generators.size(); ++i) cc.colour[generators[i]] = r + i;
  cc.classes = r + generators.size();

  const auto gamma = generating_graph(cyclic_group(n));
  Colouring col{cc.colour};
  std::vector<Vertex> clique(cc.clique.begin(), cc.clique.end());
  if (!is_clique(gamma.graph, clique) || !verify_certificate(gamma.graph, col) || col.class_count() != cc.classes ||
      cc.classes != profile.phi + profile.pi)
    throw InternalMismatch("cyclic clique/colouring failed re-verification");
  return cc;
}

DominatingSet product_dominating_set(std::span<const std::size_t> parts) {
  if (parts.empty() || !std::is_sorted(parts.begin(), parts.end()))
    throw PreconditionError("parts must be nonempty and ascending");
  const std::size_t s = parts.size();
  if (parts.front() <= s) throw PreconditionError("diagonal dominating set needs a_1 > s");
  DominatingSet t;
  for (std::size_t k = 0; k <= s; ++k) {
    std::size_t idx = 0;
    for (auto a : parts) idx = idx * a + k;
    t.vertices.push_back(static_cast<Vertex>(idx));
  }
  if (!verify_certificate(complete_product(parts), Certificate{t}))
    throw InternalMismatch("diagonal set failed re-verification");
  return t;
}

NilpotentTd nilpotent_td(const Group& g, SearchBudget budget) {
  if (g.order() < 2) throw PreconditionError("total domination of the trivial group: Delta is empty");
  NilpotentTd out;
  const auto delta = delta_graph(g);
  auto check = [&](const std::vector<Elem>& set) {
    if (!is_total_dominating(delta.graph, to_vertices(delta, set, g.order())))
      throw InternalMismatch("lifted set is not totally dominating in Delta(G)");
  };

  if (g.is_cyclic()) {
    out.status = DominationResult::Status::Solved;
    out.gammaT = 1;
    out.set = {least_generator(g)};
    check(out.set);
    return out;
  }

  const auto fc = frattini_coordinates(g);
  TDReduction red;
  red.structure = fc.structure;
  std::size_t offset = 0;
  std::vector<std::size_t> blockOffset;
  for (std::size_t b = 0; b < fc.primes.size(); ++b) {
    blockOffset.push_back(offset);
    offset += fc.blockRank[b];
  }
  const std::size_t width = offset;
  for (std::size_t b = 0; b < fc.primes.size(); ++b) {
    const auto q = fc.primes[b];
    if (fc.blockRank[b] == 1) {
      red.cyclicGenerators.push_back(fc.basis[b][0]);
      continue;
    }
    const std::size_t o = blockOffset[b];
    std::set<std::pair<std::uint64_t, std::uint64_t>> lines;
    std::vector<Elem> gens;
    for (Elem x = 1; x < fc.coords.size(); ++x) {
      const auto& c = fc.coords[x];
      bool inside = true;
      for (std::size_t k = 0; k < width && inside; ++k)
        if (k != o && k != o + 1) inside = c[k] == 0;
      if (!inside) continue;
      // Normalise so the first nonzero coordinate is 1.
      const auto lead = c[o] != 0 ? c[o] : c[o + 1];
      std::uint64_t inv = 1;
      while (lead * inv % q != 1) ++inv;
      if (lines.insert({c[o] * inv % q, c[o + 1] * inv % q}).second) gens.push_back(x);
    }
    if (gens.size() != q + 1) throw InternalMismatch("wrong number of cyclic subgroups in a C_q^2 block");
    red.parts.push_back(q + 1);
    red.subgroupGenerators.push_back(std::move(gens));
  }

  const auto bounds = td_bounds(red.parts);
  const auto product = complete_product(red.parts);
  const auto res = total_domination(product, budget, bounds.lower);
  out.bounds = bounds;
  out.nodes = res.nodes;
  out.status = res.status;
  if (res.status != DominationResult::Status::Solved) {
    out.reduction = std::move(red);
    return out;
  }
  out.gammaT = res.gammaT;
  out.productSet = res.set;

  for (Vertex v : res.set.vertices) {
    std::vector<std::size_t> digit(red.parts.size());
    std::size_t rest = v;
    for (std::size_t j = red.parts.size(); j-- > 0;) {
      digit[j] = rest % red.parts[j];
      rest /= red.parts[j];
    }
    std::vector<std::uint64_t> c(width, 0);
    std::size_t j = 0;
    for (std::size_t b = 0; b < fc.primes.size(); ++b) {
      const std::size_t o = blockOffset[b];
      if (fc.blockRank[b] == 1) {
        c[o] = 1;
      } else {
        const auto& gc = fc.coords[red.subgroupGenerators[j][digit[j]]];
        c[o] = gc[o];
        c[o + 1] = gc[o + 1];
        ++j;
      }
    }
    out.set.push_back(fc.quotient.section[fc.element(c)]);
  }
  std::sort(out.set.begin(), out.set.end());
  check(out.set);
  out.reduction = std::move(red);
  return out;
}

}  // namespace gengraph
