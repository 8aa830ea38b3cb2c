#pragma once

#include <vector>

#include "twforge/graph.hpp"

namespace twforge {

struct Wall {
    Graph graph;
    int t = 0;
    int rows = 0, cols = 0;
    int id(int r, int c) const { return r * cols + c; }
};

// Canonical t-by-t wall: t rows of 2t-2 vertices laid out as a brick wall,
// rung columns alternating per row pair, with one extra rung closing each
// exposed corner so the minimum degree stays 2. 2t^2-2t vertices, max
// degree 3, bipartite, planar.
Wall make_wall(int t);

// Rooted subdivided star forest living inside a host graph. Stems run
// leaf -> root, inclusive of both ends.
struct RootedStarForest {
    struct Component {
        int root = -1;
        std::vector<std::vector<int>> stems;
    };
    std::vector<Component> components;

    int size() const { return int(components.size()); }
    int reach() const;
    std::vector<int> roots() const;
    std::vector<int> leaves() const;
    std::vector<int> all_vertices() const;
};

// g[forest vertices] must realize exactly the claimed stars.
bool check_forest_in_host(const Graph& g, const RootedStarForest& f);

struct StarForestGraph {
    Graph graph;
    RootedStarForest forest;
};

// theta disjoint copies of S_{delta,lambda}, each stem of length lambda.
StarForestGraph make_star_forest(int theta, int delta, int lambda);

// Widening bookkeeping for a (rho,sigma)-widening of a path: marks[2i] and
// marks[2i+1] bound segment i; strict means every gap is exactly sigma.
struct WideningSpec {
    int rho = 0;
    int sigma = 1;
    int theta = 1;
    bool strict = false;
};

// Checks that marks (positions along path) form a (rho,sigma)-widening.
bool check_widening(const std::vector<int>& path, const std::vector<int>& marks,
                    const WideningSpec& spec);

struct DaviesGraph {
    Graph graph;
    std::vector<std::vector<int>> paths;         // theta anticomplete paths
    std::vector<int> hubs;                       // x_1..x_theta
    std::vector<std::vector<int>> marks;         // per path, 2*theta marked vertices
    int rho = 0, sigma = 1, theta = 2;
};

// The Davies construction J_{rho,sigma,theta}: each path carries a strict
// (rho,sigma)-widening and hub x_i is adjacent to exactly the i-th segment
// of every path.
DaviesGraph make_davies(int rho, int sigma, int theta);

struct Caterpillar {
    Graph graph;
    std::vector<int> spine;        // induced path, both ends leaves
    std::vector<int> leaves;       // sigma-wide enumeration order
    std::vector<int> branch_of;    // per leaf: its nearest branch vertex (spine ends map to themselves)
};

// Caterpillar with |gaps|+1 leaves; gaps are the consecutive distances of
// the widening tuple (l_1, v_{l_2}, .., v_{l_{k-1}}, l_k) along the spine.
// Middle stems have the given lengths (default 1 each).
Caterpillar make_caterpillar(const std::vector<int>& gaps, int sigma,
                             const std::vector<int>& stem_lengths = {});

}  // namespace twforge
