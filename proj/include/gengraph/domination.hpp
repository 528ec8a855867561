#pragma once

#include "gengraph/certificate.hpp"
#include "gengraph/graph.hpp"
#include "gengraph/search.hpp"

#include <cstddef>
#include <cstdint>
#include <span>

namespace gengraph {

struct DominationResult {
  enum class Status { Solved, Undefined, BudgetExceeded };
  Status status = Status::Undefined;
  std::size_t gammaT = 0;  // when Solved
  DominatingSet set;
  std::uint64_t nodes = 0;
  std::size_t provenLower = 0;  // sizes below this were refuted
};

/// Minimum total dominating set. A self-dominating vertex counts as its own
/// neighbour. Sizes are tried in increasing order from `lowerHint`; each size
/// is an exhaustive search branching on the undominated vertex with fewest
/// available dominators.
DominationResult total_domination(const Graph& g, SearchBudget budget = {}, std::size_t lowerHint = 1);

/// gamma_t(K_{a_1} x ... x K_{a_s}) without the graph. A set T of k vertices
/// is read as one partition of T per coordinate (by value); T fails exactly
/// when some choice of one class per coordinate covers T. Coordinates with
/// a_i >= k are taken discrete and the others with exactly a_i classes, the
/// finest choices available. Vertices are numbered as in complete_product.
DominationResult complete_product_td(std::span<const std::size_t> parts, SearchBudget budget = {});

struct TdBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t t = 0;
};

/// Bounds for gamma_t(K_{a_1} x ... x K_{a_s}), parts ascending and >= 2:
/// lower = ceil(a_1/(a_1-1) ceil(... ceil(a_s/(a_s-1)) ...)),
/// upper = 2^t (s - t + 1), t least with a_i > s - t for all i > t.
TdBounds td_bounds(std::span<const std::size_t> parts);

/// min(kappa * sum t_i, delta * sum_{i<u} t_i) for Gamma x K_{t_1,...,t_u};
/// parts are sorted ascending first and must satisfy u >= 3,
/// t_1 + ... + t_{u-2} >= t_{u-1} and t_1 + ... + t_{u-1} >= t_u.
std::size_t kappa_product_formula(std::size_t kappaGamma, std::size_t deltaGamma, std::span<const std::size_t> parts);

}  // namespace gengraph
