#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twforge/util.hpp"

namespace twforge {

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept
// sorted; duplicate edges collapse (set semantics), self-loops are rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, const std::vector<std::pair<int, int>>& edge_list = {});

    int n() const { return n_; }
    int m() const { return m_; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }
    std::vector<std::pair<int, int>> edges() const;  // lexicographic, u < v
    const Bits& neighbor_bits(int v) const { return adj_bits_[v]; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bits> adj_bits_;
};

// Vertex sequence; a path when consecutive entries are adjacent and all
// entries distinct. `induced` additionally forbids chords.
struct PathSeq {
    std::vector<int> vertices;

    int length() const { return int(vertices.size()) - 1; }
    std::vector<int> interior() const {
        if (vertices.size() <= 2) return {};
        return std::vector<int>(vertices.begin() + 1, vertices.end() - 1);
    }
};

bool is_path(const Graph& g, const PathSeq& p);
bool is_induced_path(const Graph& g, const PathSeq& p);

struct Separation {
    std::vector<int> left, middle, right;
};

// (L,M,R) partitions V, L and R nonempty and anticomplete.
bool is_separation(const Graph& g, const Separation& s);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;    // new id -> host id
    std::vector<int> from_host;  // host id -> new id, -1 if absent
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& x);

struct LineGraph {
    Graph graph;
    std::vector<std::pair<int, int>> edge_of_vertex;  // line vertex -> host edge
};

LineGraph line_graph(const Graph& g);

struct Subdivision {
    Graph graph;
    std::vector<int> branch_of;                 // host id -> new id (identity prefix)
    std::vector<std::vector<int>> edge_paths;   // per host edge, full new-id path
};

// lengths[e] >= 1 gives the path length replacing edge e (edges() order);
// every length r+1 yields the r-subdivision.
Subdivision subdivide(const Graph& g, const std::vector<int>& lengths);
Subdivision subdivide_uniform(const Graph& g, int length);

// Shortest cycle length, not necessarily induced; nullopt on forests.
std::optional<int> girth(const Graph& g);

std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
// Component of g[allowed] containing v (v must be allowed).
std::vector<int> component_of(const Graph& g, int v, const Bits& allowed);
// BFS distances from src inside g[allowed]; -1 when unreachable.
std::vector<int> bfs_distances(const Graph& g, int src, const Bits& allowed);

// Z(G): vertices whose neighborhood is a clique.
std::vector<int> simplicial_set(const Graph& g);

struct SuppressResult {
    Graph graph;
    std::vector<int> kept;  // new id -> original id
};

// Repeatedly suppresses S-bumps (degree-2 vertices outside S with
// non-adjacent neighbors); the input is a subdivision of the result.
SuppressResult suppress_bumps(const Graph& g, const std::vector<int>& s);

struct Contraction {
    Graph graph;
    std::vector<int> image;  // host id -> contracted id
};

// Contracts each part (disjoint, connected) to a single vertex.
Contraction contract_sets(const Graph& g, const std::vector<std::vector<int>>& parts);

// Bron-Kerbosch with pivoting; output capped for safety.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, int cap = 200000);

// Assorted predicates used throughout.
bool is_clique(const Graph& g, const std::vector<int>& xs);
bool is_stable_set(const Graph& g, const std::vector<int>& xs);
bool is_anticomplete(const Graph& g, const std::vector<int>& a, const std::vector<int>& b);
bool is_tree(const Graph& g);
std::vector<int> neighborhood_of_set(const Graph& g, const std::vector<int>& xs);

}  // namespace twforge
