#pragma once

#include "gengraph/certificate.hpp"
#include "gengraph/graph.hpp"
#include "gengraph/search.hpp"

#include <optional>
#include <string>

namespace gengraph {

struct EulerResult {
  std::optional<EulerCircuit> circuit;
  std::string reason;  // why no circuit exists; empty on success
};

/// Hierholzer's construction when the graph is connected with all degrees
/// even. Isolated vertices are not ignored.
EulerResult eulerian_circuit(const Graph& g);

struct HamiltonResult {
  Outcome outcome = Outcome::No;
  std::optional<HamCycle> cycle;
  std::uint64_t nodes = 0;
  bool dirac = false;  // minimum degree >= n/2
  std::string reason;
};

/// Backtracking search for a Hamiltonian cycle, starting from a minimum-degree
/// vertex and extending along the neighbour with fewest free neighbours.
HamiltonResult hamiltonian(const Graph& g, SearchBudget budget = {});

}  // namespace gengraph
