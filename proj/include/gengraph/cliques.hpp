#pragma once

#include "gengraph/certificate.hpp"
#include "gengraph/graph.hpp"
#include "gengraph/search.hpp"

#include <cstddef>
#include <cstdint>

namespace gengraph {

struct CliqueResult {
  bool exact = false;  // false when the budget ran out; clique is then the best found
  std::size_t omega = 0;
  Clique clique;
  std::uint64_t nodes = 0;
};

/// Maximum clique by branch and bound with greedy-colouring bounds.
CliqueResult clique_number(const Graph& g, SearchBudget budget = {});

struct ColouringResult {
  bool exact = false;
  std::size_t lower = 0;  // chi when exact
  std::size_t upper = 0;
  Colouring colouring;    // a proper colouring with `upper` classes
  std::uint64_t nodes = 0;
};

/// Exact chromatic number by DSATUR branch and bound, seeded with a maximum
/// clique (lower bound, pre-coloured) and the greedy DSATUR colouring.
ColouringResult chromatic_number(const Graph& g, SearchBudget budget = {});

}  // namespace gengraph
