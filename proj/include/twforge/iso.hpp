#pragma once

#include <optional>
#include <vector>

#include "twforge/graph.hpp"

namespace twforge {

// Backtracking isomorphism test with iterated degree-refinement pruning.
// Intended for test graphs (<= ~60 vertices).
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace twforge
