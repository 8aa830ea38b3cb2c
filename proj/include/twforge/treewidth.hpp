#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twforge/graph.hpp"

namespace twforge {

struct TreeDecomposition {
    Graph tree;
    std::vector<std::vector<int>> bags;

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, int(b.size()) - 1);
        return w;
    }
};

struct TreewidthResult {
    std::optional<int> width;  // nullopt when n exceeds the limit
    TreeDecomposition decomposition;
};

// Exact treewidth by dynamic programming over elimination prefixes
// (Held-Karp style over subsets), with simplicial-vertex preprocessing.
TreewidthResult exact_treewidth(const Graph& g, int limit = 18);

struct DecompositionCheck {
    bool valid = false;
    std::vector<std::string> violations;
};

DecompositionCheck validate_decomposition(const Graph& g, const TreeDecomposition& td);

// Bag of x with every adhesion toward a neighbor completed into a clique.
Graph torso(const Graph& g, const TreeDecomposition& td, int x,
            std::vector<int>* bag_vertices = nullptr);

// One adhesion per tree edge, in tree.edges() order.
std::vector<std::vector<int>> adhesions(const TreeDecomposition& td);

struct TightnessResult {
    bool tight = false;
    // First violated oriented tree edge (x toward neighbor y), -1/-1 if tight.
    int x = -1, y = -1;
};

TightnessResult is_tight(const Graph& g, const TreeDecomposition& td);

struct MinorBound {
    bool certified = false;
    int theta = 0;
    std::vector<int> side_a, side_b;  // contracted-graph vertices of the K_{theta,theta}
};

// Verifies that contracting the given disjoint connected parts yields a
// graph with a K_{theta,theta} subgraph, certifying tw(g) >= theta.
MinorBound minor_lower_bound(const Graph& g, int theta,
                             const std::vector<std::vector<int>>& parts);

}  // namespace twforge
