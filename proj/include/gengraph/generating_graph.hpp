#pragma once

#include "gengraph/graph.hpp"
#include "gengraph/group.hpp"
#include "gengraph/structure.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gengraph {

using Rational = boost::rational<std::int64_t>;

/// Gamma(G) or Delta(G). Vertex v stands for element vertexElements[v];
/// single-element generators carry the self-dominating mark.
struct GeneratingGraph {
  Graph graph;
  std::vector<Elem> vertexElements;
  std::vector<std::string> labels;

  /// vertex of each element, or -1 when the element is not a vertex
  std::vector<std::int64_t> vertex_of(std::size_t groupOrder) const;
};

/// Edges are exactly the generating pairs, decided by closure.
GeneratingGraph generating_graph(const Group& g);

/// Induced subgraph on the nonisolated vertices.
GeneratingGraph delta_graph(const GeneratingGraph& gamma);

GeneratingGraph delta_graph(const Group& g);

/// One degree class: elements whose coset in G/Phi(G) has order
/// prod_{i in I} p_i * prod_j q_j.
struct DegreeClass {
  std::vector<std::uint64_t> subset;  // the primes p_i with i in I
  std::uint64_t cosetOrder = 0;
  std::uint64_t observedCount = 0;
  std::uint64_t observedDegree = 0;
  Rational alpha;
  Rational beta;
  int epsilon = 0;
};

struct DegreeProfile {
  NilpotentStructure structure;
  std::vector<DegreeClass> classes;  // subsets in binary-counter order over p_1..p_r
  Rational genProbabilityObserved;
  Rational genProbabilityFormula;
  std::uint64_t nonisolatedObserved = 0;
  Rational nonisolatedFormula;
  std::uint64_t minDegreeObserved = 0;
  Rational minDegreeFormula;
};

/// Observed statistics of Gamma(G) against the closed forms for nilpotent
/// 2-generated G. Throws InternalMismatch when any pair disagrees.
DegreeProfile degree_profile(const Group& g);

/// Closed forms from prime data alone.
Rational formula_gen_probability(const NilpotentStructure& ns);
Rational formula_nonisolated(const NilpotentStructure& ns);
Rational formula_min_degree(const NilpotentStructure& ns);

/// |nonisolated vertices| / |vertices of minimum degree in Delta|; throws
/// PreconditionError when the ratio is not an integer.
std::uint64_t recover_cyclic_radical(const GeneratingGraph& gamma);

/// Delta(G_d) from the tuple rules alone (no Cayley table). vertexElements
/// are element indices of example_family_group(d).
GeneratingGraph example_family_graph(unsigned d, std::size_t maxVertices = 6000);
std::uint64_t example_family_vertex_count(unsigned d);
std::uint64_t example_family_degree(unsigned d);

/// Coordinates of G/Phi(G) for nilpotent 2-generated G, which is a product of
/// C_p factors (cyclic Sylow) and C_q^2 factors (noncyclic Sylow). Basis
/// vectors are chosen as least element indices.
struct FrattiniCoordinates {
  Quotient quotient;
  NilpotentStructure structure;
  std::vector<std::uint64_t> primes;   // one entry per basis block, ascending
  std::vector<unsigned> blockRank;     // 1 for C_p, 2 for C_q^2
  std::vector<std::vector<Elem>> basis;  // basis elements of each block
  std::vector<std::vector<std::uint64_t>> coords;  // quotient element -> flat coordinates
  Elem element(std::span<const std::uint64_t> c) const;
};

FrattiniCoordinates frattini_coordinates(const Group& g);

/// Generation in G/Phi(G) by the componentwise rule: nonzero in some entry on
/// every C_p block, linearly independent on every C_q^2 block.
bool frattini_rule_generates(const FrattiniCoordinates& fc, Elem x, Elem y);

/// Element bijection G -> H mapping cosets of Phi(G) to cosets of Phi(H)
/// through the coordinate isomorphism, and the k-th smallest element of each
/// coset to the k-th smallest of its image. Throws PreconditionError when the
/// Frattini quotients or |Phi| differ.
std::vector<Elem> coset_bijection(const FrattiniCoordinates& a, const FrattiniCoordinates& b);

struct LexDecomposition {
  Graph lhs;                       // Delta(G) relabelled so vertex (c, j) is section(c) * f_j
  Graph rhs;                       // built from Delta(G/Phi) by lexicographic product
  std::vector<Elem> vertexElements;  // element of each lhs/rhs vertex
  bool equal = false;
};

/// For noncyclic G, rhs = Delta(G/Phi)[null_{|Phi|}]. For cyclic G the blocks
/// of cosets that generate G/Phi are complete; with `literalCyclicRule` only
/// the block of Phi itself is left empty, which is wrong e.g. for C12.
LexDecomposition lex_decomposition(const Group& g, bool literalCyclicRule = false);

}  // namespace gengraph
