#pragma once

#include "gengraph/group.hpp"
#include "gengraph/numtheory.hpp"

#include <cstdint>
#include <vector>

namespace gengraph {

/// Prime data of a nilpotent group: |G| = prod p_i^a_i * prod q_j^b_j where the
/// Sylow p_i-subgroups are cyclic and the Sylow q_j-subgroups are not.
struct NilpotentStructure {
  std::vector<PrimePower> cyclicSylow;     // (p_i, a_i), ascending primes
  std::vector<PrimePower> noncyclicSylow;  // (q_j, b_j), ascending primes
  bool twoGenerated = false;

  std::size_t r() const { return cyclicSylow.size(); }
  std::size_t s() const { return noncyclicSylow.size(); }
  bool cyclic() const { return noncyclicSylow.empty(); }
  std::uint64_t order() const;
  /// Order of the Frattini subgroup for a 2-generated group with this data.
  std::uint64_t frattini_order() const;
  /// p_1 * ... * p_r (1 when r = 0).
  std::uint64_t cyclic_radical() const;

  friend bool operator==(const NilpotentStructure&, const NilpotentStructure&) = default;
};

enum class FrattiniMethod { Lattice, NilpotentFormula };

inline constexpr std::size_t kDefaultMaxOrder = 200;

/// Every subgroup, as closed element sets; index 0 is the trivial subgroup.
/// Throws GroupError when |G| exceeds `maxOrder`.
std::vector<ElementSet> subgroup_lattice(const Group& g, std::size_t maxOrder = kDefaultMaxOrder);

ElementSet frattini(const Group& g, FrattiniMethod method, std::size_t maxOrder = kDefaultMaxOrder);

bool is_nilpotent(const Group& g);

/// Sylow subgroups of a nilpotent group, one per prime divisor in ascending
/// order. Throws NotNilpotent otherwise.
std::vector<std::pair<std::uint64_t, ElementSet>> sylow_subgroups(const Group& g);

/// The p-part of `x` in a nilpotent group (x = product of its commuting p-parts).
Elem sylow_component(const Group& g, Elem x, std::uint64_t p);

NilpotentStructure nilpotent_structure(const Group& g);

struct Quotient {
  Group group;
  ElementSet kernel;
  std::vector<Elem> cosetOf;  // element of G -> quotient element
  std::vector<Elem> section;  // quotient element -> least element of its coset
};

/// G/N for a normal subgroup N. Cosets are numbered by their least element.
Quotient quotient(const Group& g, const ElementSet& normal);

/// G/Phi(G); uses the nilpotent formula when G is nilpotent, the lattice otherwise.
Quotient quotient_mod_frattini(const Group& g, std::size_t maxOrder = kDefaultMaxOrder);

/// Invariants of an abelian group as ascending prime powers (elementary divisors).
std::vector<std::uint64_t> abelian_invariants(const Group& g);

}  // namespace gengraph
