#pragma once

#include "gengraph/certificate.hpp"
#include "gengraph/domination.hpp"
#include "gengraph/generating_graph.hpp"
#include "gengraph/group.hpp"
#include "gengraph/search.hpp"
#include "gengraph/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gengraph {

// Constructions speak in group elements; a cycle is a list of elements and is
// checked against Delta(G) after mapping elements to its vertices.

/// Vertices of `graph` standing for `elements`; throws PreconditionError for an
/// element that is not a vertex.
std::vector<Vertex> to_vertices(const GeneratingGraph& graph, std::span<const Elem> elements, std::size_t groupOrder);

/// Hamiltonian cycle with one chord joining two odd positions and one joining
/// two even positions (positions 0-based along the cycle).
struct HWitness {
  std::vector<Elem> cycle;
  std::pair<std::size_t, std::size_t> chordOdd;
  std::pair<std::size_t, std::size_t> chordEven;
};

/// (1, g, g^2, ..., g^{n-1}) in C_n, element k being g^k. Needs n >= 3.
std::vector<Elem> cyclic_hamiltonian(std::size_t n);
/// The same cycle for a cyclic group, g its least generator.
std::vector<Elem> cyclic_hamiltonian(const Group& g);

struct PGroupCycle {
  std::vector<Elem> cycle;
  bool constructed = true;  // false when search replaced a failed construction
  std::optional<HWitness> witness;
};

/// Concatenation of the paths H_i = (b f_i, a f_i, a b f_i, ..., a^{p-1} b^{p-1} f_i)
/// over Phi(P) = {f_1 = 1 < f_2 < ...}. For odd p also the chords {b, ab} and
/// {a, ab^2}. For p = 2 a failing construction falls back to search.
PGroupCycle pgroup_hamiltonian(const Group& p, Elem a, Elem b, SearchBudget budget = {});
/// With the least generating pair.
PGroupCycle pgroup_hamiltonian(const Group& p, SearchBudget budget = {});

struct ProductCycle {
  Group group;  // C2 x P, C2 the first factor
  std::vector<Elem> cycle;
};

/// Hamiltonian cycle of Delta(C2 x P) for a 2-generated p-group P, p odd.
/// Noncyclic P: the cycle (u_11, ..., u_mk, v_11, ..., v_mk) with u_ij = x^j h_ij
/// and v_ij = x^j h_i(j+3). Cyclic P: powers of the generator (x, y).
ProductCycle c2_times_p_hamiltonian(const Group& p);

struct HMembership {
  bool member = false;  // odd order counts as a member
  std::optional<HChords> witness;
};

/// Looks for the two chords on the given Hamiltonian cycle only.
HMembership h_membership(const Graph& g, const HamCycle& cycle);

struct NilpotentCycle {
  Outcome outcome = Outcome::No;
  std::vector<Elem> cycle;
  std::string method;  // cyclic, p-group, c2-times-p, search
  std::uint64_t nodes = 0;
  std::string reason;
};

/// Hamiltonian cycle of Delta(G) for nilpotent 2-generated G: constructions
/// where available, otherwise search on Delta(G).
NilpotentCycle nilpotent_hamiltonian(const Group& g, SearchBudget budget = {});

struct CliqueColouring {
  std::vector<Elem> clique;           // x_1..x_u then y_1..y_r
  std::vector<std::size_t> colour;    // class of each element of C_n
  std::size_t classes = 0;
};

/// Clique of the phi(n) generators and g^{p_i}, with a colouring of Gamma(C_n)
/// by the classes <g^{p_i}> minus earlier ones, then one class per generator.
CliqueColouring cyclic_clique_colouring(std::size_t n);

/// The diagonal {(k, ..., k) : 0 <= k <= s} in K_{a_1} x ... x K_{a_s}, as
/// vertices of complete_product(parts). Needs a_1 > s.
DominatingSet product_dominating_set(std::span<const std::size_t> parts);

struct TDReduction {
  NilpotentStructure structure;
  std::vector<std::size_t> parts;  // q_j + 1
  /// For each q_j: generators (elements of G/Phi) of the q_j + 1 nontrivial
  /// cyclic subgroups of its C_{q_j}^2 block, least element first.
  std::vector<std::vector<Elem>> subgroupGenerators;
  std::vector<Elem> cyclicGenerators;  // basis element of each C_{p_i} block of G/Phi
};

struct NilpotentTd {
  DominationResult::Status status = DominationResult::Status::Undefined;
  std::size_t gammaT = 0;
  std::vector<Elem> set;  // totally dominating in Delta(G)
  std::optional<TDReduction> reduction;
  std::optional<TdBounds> bounds;
  DominatingSet productSet;  // solution on the complete product
  std::uint64_t nodes = 0;
};

/// gamma_t(Delta(G)) through K_{q_1+1} x ... x K_{q_s+1}, lifted back to G.
/// Cyclic G gives 1 with its least generator.
NilpotentTd nilpotent_td(const Group& g, SearchBudget budget = {});

}  // namespace gengraph
