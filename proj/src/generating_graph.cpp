#include "gengraph/generating_graph.hpp"

#include "gengraph/errors.hpp"
#include "gengraph/spec.hpp"

#include <algorithm>
#include <map>

namespace gengraph {

std::vector<std::int64_t> GeneratingGraph::vertex_of(std::size_t groupOrder) const {
  std::vector<std::int64_t> out(groupOrder, -1);
  for (std::size_t v = 0; v < vertexElements.size(); ++v) out[vertexElements[v]] = static_cast<std::int64_t>(v);
  return out;
}

GeneratingGraph generating_graph(const Group& g) {
  const std::size_t n = g.order();
  GeneratingGraph gg{Graph(n), {}, g.labels()};
  gg.vertexElements.resize(n);
  for (Elem x = 0; x < n; ++x) {
    gg.vertexElements[x] = x;
    if (g.element_order(x) == n) gg.graph.set_self_dominating(x);
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (is_generating_pair(g, x, y)) gg.graph.add_edge(x, y);
  return gg;
}

GeneratingGraph delta_graph(const GeneratingGraph& gamma) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < gamma.graph.vertex_count(); ++v)
    if (gamma.graph.degree(v) > 0) keep.push_back(v);
  GeneratingGraph d{gamma.graph.induced(keep), {}, {}};
  for (Vertex v : keep) {
    d.vertexElements.push_back(gamma.vertexElements[v]);
    d.labels.push_back(gamma.labels[v]);
  }
  return d;
}

GeneratingGraph delta_graph(const Group& g) { return delta_graph(generating_graph(g)); }

Rational formula_gen_probability(const NilpotentStructure& ns) {
  Rational p(1);
  for (auto [pi, a] : ns.cyclicSylow) p *= Rational(1) - Rational(1, static_cast<std::int64_t>(pi * pi));
  for (auto [q, b] : ns.noncyclicSylow) {
    const auto qq = static_cast<std::int64_t>(q);
    p *= (Rational(1) - Rational(1, qq * qq)) * (Rational(1) - Rational(1, qq));
  }
  return p;
}

Rational formula_nonisolated(const NilpotentStructure& ns) {
  Rational v(static_cast<std::int64_t>(ns.order()));
  for (auto [q, b] : ns.noncyclicSylow) v *= Rational(1) - Rational(1, static_cast<std::int64_t>(q * q));
  return v;
}

namespace {

Rational formula_alpha(const NilpotentStructure& ns, std::uint64_t mask) {
  Rational a(static_cast<std::int64_t>(ns.order()));
  for (std::size_t i = 0; i < ns.r(); ++i) {
    const auto p = static_cast<std::int64_t>(ns.cyclicSylow[i].first);
    a *= (mask >> i & 1) ? Rational(p - 1, p) : Rational(1, p);
  }
  for (auto [q, b] : ns.noncyclicSylow) a *= Rational(1) - Rational(1, static_cast<std::int64_t>(q * q));
  return a;
}

Rational formula_beta(const NilpotentStructure& ns, std::uint64_t mask, int epsilon) {
  Rational b(static_cast<std::int64_t>(ns.order()));
  for (std::size_t i = 0; i < ns.r(); ++i) {
    const auto p = static_cast<std::int64_t>(ns.cyclicSylow[i].first);
    if (!(mask >> i & 1)) b *= Rational(p - 1, p);
  }
  for (auto [q, e] : ns.noncyclicSylow) {
    const auto qq = static_cast<std::int64_t>(q);
    b *= Rational(qq - 1, qq);
  }
  return b - epsilon;
}

std::string show(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

Rational formula_min_degree(const NilpotentStructure& ns) {
  const int epsilon = ns.cyclic() && ns.r() == 0 ? 1 : 0;
  return formula_beta(ns, 0, epsilon);
}

DegreeProfile degree_profile(const Group& g) {
  if (g.order() == 1) throw PreconditionError("degree profile of the trivial group: Delta is empty");
  DegreeProfile prof;
  prof.structure = nilpotent_structure(g);
  if (!prof.structure.twoGenerated) throw NotTwoGenerated();
  const auto& ns = prof.structure;
  const auto gamma = generating_graph(g);
  const auto q = quotient_mod_frattini(g);
  const std::size_t n = g.order();

  std::uint64_t qprod = 1;
  for (auto [qj, b] : ns.noncyclicSylow) qprod *= qj;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ns.r()); ++mask) {
    DegreeClass c;
    c.cosetOrder = qprod;
    for (std::size_t i = 0; i < ns.r(); ++i)
      if (mask >> i & 1) {
        c.subset.push_back(ns.cyclicSylow[i].first);
        c.cosetOrder *= ns.cyclicSylow[i].first;
      }
    c.epsilon = ns.cyclic() && c.subset.size() == ns.r() ? 1 : 0;
    c.alpha = formula_alpha(ns, mask);
    c.beta = formula_beta(ns, mask, c.epsilon);
    bool first = true;
    for (Elem x = 0; x < n; ++x) {
      if (q.group.element_order(q.cosetOf[x]) != c.cosetOrder) continue;
      const auto d = gamma.graph.degree(x);
      if (first) {
        c.observedDegree = d;
        first = false;
      } else if (d != c.observedDegree) {
        throw InternalMismatch("elements of coset order " + std::to_string(c.cosetOrder) + " have degrees " +
                               std::to_string(c.observedDegree) + " and " + std::to_string(d));
      }
      ++c.observedCount;
    }
    if (Rational(static_cast<std::int64_t>(c.observedCount)) != c.alpha)
      throw InternalMismatch("coset order " + std::to_string(c.cosetOrder) + ": " + std::to_string(c.observedCount) +
                             " elements, formula " + show(c.alpha));
    if (Rational(static_cast<std::int64_t>(c.observedDegree)) != c.beta)
      throw InternalMismatch("coset order " + std::to_string(c.cosetOrder) + ": degree " +
                             std::to_string(c.observedDegree) + ", formula " + show(c.beta));
    prof.classes.push_back(std::move(c));
  }

  const auto& graph = gamma.graph;
  const auto ordered = 2 * graph.edge_count() + graph.self_dominating_marks().count();
  prof.genProbabilityObserved = Rational(static_cast<std::int64_t>(ordered), static_cast<std::int64_t>(n * n));
  prof.genProbabilityFormula = formula_gen_probability(ns);
  std::uint64_t minDeg = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto d = graph.degree(v);
    if (d == 0) continue;
    ++prof.nonisolatedObserved;
    if (minDeg == 0 || d < minDeg) minDeg = d;
  }
  prof.minDegreeObserved = minDeg;
  prof.nonisolatedFormula = formula_nonisolated(ns);
  prof.minDegreeFormula = formula_min_degree(ns);

  if (prof.genProbabilityObserved != prof.genProbabilityFormula)
    throw InternalMismatch("generation probability " + show(prof.genProbabilityObserved) + ", formula " +
                           show(prof.genProbabilityFormula));
  if (Rational(static_cast<std::int64_t>(prof.nonisolatedObserved)) != prof.nonisolatedFormula)
    throw InternalMismatch("nonisolated vertices " + std::to_string(prof.nonisolatedObserved) + ", formula " +
                           show(prof.nonisolatedFormula));
  if (Rational(static_cast<std::int64_t>(prof.minDegreeObserved)) != prof.minDegreeFormula)
    throw InternalMismatch("minimum degree " + std::to_string(prof.minDegreeObserved) + ", formula " +
                           show(prof.minDegreeFormula));
  return prof;
}

std::uint64_t recover_cyclic_radical(const GeneratingGraph& gamma) {
  const auto& g = gamma.graph;
  std::size_t minDeg = 0;
  std::uint64_t nonisolated = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto d = g.degree(v);
    if (d == 0) continue;
    ++nonisolated;
    if (minDeg == 0 || d < minDeg) minDeg = d;
  }
  if (nonisolated == 0) throw PreconditionError("graph has no edges");
  std::uint64_t atMin = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == minDeg) ++atMin;
  if (nonisolated % atMin != 0)
    throw PreconditionError("radical statistic " + std::to_string(nonisolated) + "/" + std::to_string(atMin) +
                            " is not an integer");
  return nonisolated / atMin;
}

std::uint64_t example_family_vertex_count(unsigned d) {
  std::uint64_t v = 3;
  for (unsigned i = 1; i <= d; ++i) {
    const auto p = odd_prime(i);
    v *= p * p * (p - 1);
  }
  return v;
}

std::uint64_t example_family_degree(unsigned d) {
  std::uint64_t k = 2;
  for (unsigned i = 1; i <= d; ++i) {
    const auto p = odd_prime(i);
    k *= p * (p - 1) * (p - 1);
  }
  return k;
}

GeneratingGraph example_family_graph(unsigned d, std::size_t maxVertices) {
  if (d < 1) throw PreconditionError("example family needs d >= 1");
  const auto count = example_family_vertex_count(d);
  if (count > maxVertices)
    throw GroupError("example family graph has " + std::to_string(count) + " vertices, above the guard " +
                     std::to_string(maxVertices));
  std::vector<std::uint64_t> primes(d);
  for (unsigned i = 0; i < d; ++i) primes[i] = odd_prime(i + 1);
  const std::size_t width = 3 * d;
  std::uint64_t tuples = 1;
  for (auto p : primes) tuples *= p * p * p;

  // Nonisolated: h = h_j and n_{ij} != 0 for every i.
  std::vector<std::vector<std::uint64_t>> coords;
  std::vector<unsigned> hs;
  std::vector<std::uint64_t> c(width);
  for (unsigned h = 1; h <= 3; ++h)
    for (std::uint64_t x = 0; x < tuples; ++x) {
      std::uint64_t rest = x;
      for (std::size_t k = width; k-- > 0;) {
        c[k] = rest % primes[k / 3];
        rest /= primes[k / 3];
      }
      bool keep = true;
      for (unsigned i = 0; i < d && keep; ++i) keep = c[3 * i + (h - 1)] != 0;
      if (!keep) continue;
      coords.push_back(c);
      hs.push_back(h);
    }

  GeneratingGraph gg{Graph(coords.size()), {}, {}};
  for (std::size_t v = 0; v < coords.size(); ++v) {
    gg.vertexElements.push_back(example_family_index(d, coords[v], hs[v]));
    std::string lab = "(";
    for (std::size_t k = 0; k < width; ++k) lab += (k ? "," : "") + std::to_string(coords[v][k]);
    gg.labels.push_back(lab + ";h" + std::to_string(hs[v]) + ")");
  }
  // Adjacent: h_j != h_k and n_{il} != m_{il} for the remaining index l.
  for (std::size_t u = 0; u < coords.size(); ++u)
    for (std::size_t v = u + 1; v < coords.size(); ++v) {
      if (hs[u] == hs[v]) continue;
      const unsigned l = 6 - hs[u] - hs[v] - 1;  // 0-based index of the third coordinate
      bool adj = true;
      for (unsigned i = 0; i < d && adj; ++i) adj = coords[u][3 * i + l] != coords[v][3 * i + l];
      if (adj) gg.graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  return gg;
}

FrattiniCoordinates frattini_coordinates(const Group& g) {
  FrattiniCoordinates fc{quotient_mod_frattini(g), nilpotent_structure(g), {}, {}, {}, {}};
  if (!fc.structure.twoGenerated) throw NotTwoGenerated();
  const Group& q = fc.quotient.group;
  const std::size_t m = q.order();
  std::map<std::uint64_t, unsigned> rank;
  for (auto [p, a] : fc.structure.cyclicSylow) rank[p] = 1;
  for (auto [p, b] : fc.structure.noncyclicSylow) rank[p] = 2;
  for (auto [p, r] : rank) {
    std::vector<Elem> basis;
    ElementSet span = closure(q, std::vector<Elem>{0});
    for (Elem x = 1; x < m && basis.size() < r; ++x) {
      if (q.element_order(x) != p || span.contains(x)) continue;
      basis.push_back(x);
      span = closure(q, basis);
    }
    if (basis.size() != r) throw InternalMismatch("Frattini quotient lacks the expected elementary abelian blocks");
    fc.primes.push_back(p);
    fc.blockRank.push_back(r);
    fc.basis.push_back(std::move(basis));
  }

  std::vector<std::uint64_t> radix;
  for (std::size_t b = 0; b < fc.primes.size(); ++b) radix.insert(radix.end(), fc.blockRank[b], fc.primes[b]);
  std::uint64_t total = 1;
  for (auto p : radix) total *= p;
  if (total != m) throw InternalMismatch("Frattini quotient order does not match its prime data");
  fc.coords.assign(m, {});
  std::vector<std::uint64_t> c(radix.size());
  for (std::uint64_t x = 0; x < total; ++x) {
    std::uint64_t rest = x;
    for (std::size_t k = radix.size(); k-- > 0;) {
      c[k] = rest % radix[k];
      rest /= radix[k];
    }
    const Elem e = fc.element(c);
    if (!fc.coords[e].empty()) throw InternalMismatch("Frattini quotient basis is not independent");
    fc.coords[e] = c;
  }
  return fc;
}

Elem FrattiniCoordinates::element(std::span<const std::uint64_t> c) const {
  const Group& q = quotient.group;
  Elem e = 0;
  std::size_t k = 0;
  for (const auto& block : basis)
    for (Elem b : block) e = q.mul(e, q.power(b, c[k++]));
  return e;
}

bool frattini_rule_generates(const FrattiniCoordinates& fc, Elem x, Elem y) {
  const auto& cx = fc.coords[x];
  const auto& cy = fc.coords[y];
  std::size_t k = 0;
  for (std::size_t b = 0; b < fc.primes.size(); ++b) {
    const auto p = fc.primes[b];
    if (fc.blockRank[b] == 1) {
      if (cx[k] == 0 && cy[k] == 0) return false;
    } else {
      const auto det = (cx[k] * cy[k + 1] + p * p - cx[k + 1] * cy[k]) % p;
      if (det == 0) return false;
    }
    k += fc.blockRank[b];
  }
  return true;
}

std::vector<Elem> coset_bijection(const FrattiniCoordinates& a, const FrattiniCoordinates& b) {
  if (a.primes != b.primes || a.blockRank != b.blockRank)
    throw PreconditionError("coset bijection: Frattini quotients differ");
  const auto phiA = a.quotient.kernel.elements();
  const auto phiB = b.quotient.kernel.elements();
  if (phiA.size() != phiB.size()) throw PreconditionError("coset bijection: Frattini subgroups differ in order");
  const std::size_t n = a.quotient.cosetOf.size();
  std::vector<std::vector<Elem>> cosetsB(b.quotient.section.size());
  for (Elem y = 0; y < b.quotient.cosetOf.size(); ++y) cosetsB[b.quotient.cosetOf[y]].push_back(y);
  std::vector<Elem> out(n);
  std::vector<std::size_t> seenInCoset(a.quotient.section.size(), 0);
  for (Elem x = 0; x < n; ++x) {
    const Elem c = a.quotient.cosetOf[x];
    const Elem cb = b.element(a.coords[c]);
    out[x] = cosetsB[cb][seenInCoset[c]++];
  }
  return out;
}

LexDecomposition lex_decomposition(const Group& g, bool literalCyclicRule) {
  const auto q = quotient_mod_frattini(g);
  const auto gammaQ = generating_graph(q.group);
  const auto deltaQ = delta_graph(gammaQ);
  const auto phi = q.kernel.elements();
  const std::size_t m = phi.size();
  const bool cyclic = g.is_cyclic();

  LexDecomposition lex;
  lex.rhs = lex_product(deltaQ.graph, null_graph(m));
  for (Vertex i = 0; i < deltaQ.graph.vertex_count(); ++i) {
    const bool complete = cyclic && (literalCyclicRule ? deltaQ.vertexElements[i] != 0 : deltaQ.graph.self_dominating(i));
    if (!complete) continue;
    for (Vertex j = 0; j < m; ++j)
      for (Vertex k = j + 1; k < m; ++k) lex.rhs.add_edge(static_cast<Vertex>(i * m + j), static_cast<Vertex>(i * m + k));
  }

  for (Vertex i = 0; i < deltaQ.graph.vertex_count(); ++i)
    for (Vertex j = 0; j < m; ++j) lex.vertexElements.push_back(g.mul(q.section[deltaQ.vertexElements[i]], phi[j]));

  const auto gamma = generating_graph(g);
  std::size_t nonisolated = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (gamma.graph.degree(v) > 0) ++nonisolated;
  const std::size_t nv = lex.vertexElements.size();
  lex.lhs = Graph(nv);
  bool covers = nonisolated == nv;
  for (Vertex u = 0; u < nv && covers; ++u) covers = gamma.graph.degree(lex.vertexElements[u]) > 0;
  for (Vertex u = 0; u < nv; ++u)
    for (Vertex v = u + 1; v < nv; ++v)
      if (gamma.graph.adjacent(lex.vertexElements[u], lex.vertexElements[v])) lex.lhs.add_edge(u, v);
  lex.equal = covers && lex.lhs == lex.rhs;
  return lex;
}

}  // namespace gengraph
