#pragma once

#include <cstdint>

namespace gengraph {

/// Limit on search-tree expansions; identical inputs and budgets give
/// identical outcomes.
struct SearchBudget {
  std::uint64_t maxNodes = 10'000'000;
};

enum class Outcome { Yes, No, BudgetExceeded };

const char* to_string(Outcome o);

}  // namespace gengraph
