#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twforge/budget.hpp"
#include "twforge/graph.hpp"

namespace twforge {

struct PathSystem {
    int count = 0;
    std::vector<std::vector<int>> paths;  // each x..y, internally disjoint
};

// Maximum number of internally disjoint x-y paths (vertex-capacitated max
// flow; equals the minimum separator size for non-adjacent pairs).
PathSystem pair_connectivity(const Graph& g, int x, int y);

// Maximal set of >= k vertices no two of which are separated by fewer than
// k other vertices (adjacent pairs are never separated). The pairwise
// relation need not be transitive; maximal cliques of the relation graph
// are used, largest then lexicographically least.
std::optional<std::vector<int>> find_k_block(const Graph& g, int k);

struct StrongBlockCert {
    int k = 0;
    std::vector<int> b;
    // Keyed by 2-subsets {x,y} with x < y.
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> paths;
};

struct BlockCheck {
    bool valid = false;
    std::string violation;
};

BlockCheck verify_strong_block(const Graph& g, const StrongBlockCert& cert, int k);

// Best-effort routing: seeds candidate sets from find_k_block, routes each
// pair by flow with interiors reserved globally. Output always re-verified.
std::optional<StrongBlockCert> find_strong_block(const Graph& g, int k, Budget& budget);

struct RefineResult {
    bool ok = false;
    std::vector<int> a;       // deleted set
    std::vector<int> s;       // d-stable refined block
    int achieved = 0;         // |s|
    bool stable_set_exact = true;
    std::optional<StrongBlockCert> routed;  // strong k-block cert in g - a, when found
    std::vector<std::string> trace;
};

// Greedy short-path collection over the 2-subsets of an X-subset of b0,
// auxiliary conflict graph, stable set extraction; returns A and the
// d-stable S. Mirrors the refinement loop step by step.
RefineResult distance_refine(const Graph& g, const std::vector<int>& b0, int x_size, int d,
                             int k, Budget& budget);

}  // namespace twforge
