#pragma once

#include <vector>

#include "twforge/budget.hpp"
#include "twforge/graph.hpp"

namespace twforge {

struct CliqueResult {
    SearchStatus status = SearchStatus::None;
    std::vector<int> witness;
};

// t pairwise adjacent vertices; branch and bound with degree pruning.
// None answers are exhaustive unless the budget ran out.
CliqueResult find_clique(const Graph& g, int t, Budget& budget);

struct BicliqueResult {
    SearchStatus status = SearchStatus::None;
    std::vector<int> side_a, side_b;
};

// Induced K_{t,t}: both sides stable, complete in between.
BicliqueResult find_induced_biclique(const Graph& g, int t, Budget& budget);

struct SubdivisionWitness {
    std::vector<int> branch_image;               // pattern vertex -> host vertex
    std::vector<std::vector<int>> edge_paths;    // per pattern edge, host path
    std::vector<int> vertices() const;
};

struct SubdivisionResult {
    SearchStatus status = SearchStatus::None;
    SubdivisionWitness witness;
};

// Induced subdivision of h in g where every edge path has length at least
// min_edge_len. Anchored backtracking over branch images and connecting
// paths under exact-adjacency constraints.
SubdivisionResult find_induced_subdivision(const Graph& g, const Graph& h, int min_edge_len,
                                           Budget& budget);

// Verifies a witness by direct re-checks against g (independent of search).
bool check_subdivision_witness(const Graph& g, const Graph& h, int min_edge_len,
                               const SubdivisionWitness& w);

struct LineSubdivisionWitness {
    // corner_of[e][side] is the host vertex playing the line-graph image of
    // the side-th end of pattern edge e; connections join the two corners.
    std::vector<std::vector<int>> clique_of;      // pattern vertex -> host clique
    std::vector<std::vector<int>> connections;    // per pattern edge, host path
    std::vector<int> vertices() const;
};

struct LineSubdivisionResult {
    SearchStatus status = SearchStatus::None;
    LineSubdivisionWitness witness;
};

// Induced copy of the line graph of some subdivision of h. Pattern vertices
// anchor on host cliques of size deg_h (triangles at branch vertices).
LineSubdivisionResult find_induced_line_subdivision(const Graph& g, const Graph& h,
                                                    Budget& budget);

bool check_line_subdivision_witness(const Graph& g, const Graph& h,
                                    const LineSubdivisionWitness& w);

struct FeebleResult {
    bool feeble = false;
    // Either a vertex whose closed neighborhood disconnects the rest, or a
    // set of at most two branch vertices whose removal caps degrees at two.
    int cut_vertex = -1;
    bool via_branch_set = false;
    std::vector<int> branch_set;
};

FeebleResult is_feeble(const Graph& g);

struct HoleResult {
    SearchStatus status = SearchStatus::None;
    std::vector<int> cycle;
};

// Induced cycle of length strictly greater than lambda.
HoleResult find_long_hole(const Graph& g, int lambda, Budget& budget);

bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle);

struct ShortSubdivisionResult {
    SearchStatus status = SearchStatus::None;
    std::vector<int> branch_image;
    std::vector<std::vector<int>> edge_paths;
};

// (<= d)-length subgraph subdivision of K_m: m branch vertices joined by
// pairwise internally disjoint paths of length at most d. No induced
// constraint.
ShortSubdivisionResult find_short_complete_subdivision(const Graph& g, int m, int d,
                                                       Budget& budget);

struct ObstructionReport {
    enum class Kind { None, Clique, Biclique, WallSubdivision, LineOfWallSubdivision };
    Kind kind = Kind::None;
    std::vector<int> clique;
    std::vector<int> biclique_a, biclique_b;
    SubdivisionWitness wall;
    LineSubdivisionWitness line_wall;
    bool budget_exhausted = false;
};

// First t-basic obstruction found, in the order clique, biclique, wall
// subdivision, line graph of wall subdivision.
ObstructionReport is_t_clean(const Graph& g, int t, Budget& budget);

}  // namespace twforge
