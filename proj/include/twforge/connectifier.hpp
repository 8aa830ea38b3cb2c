#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twforge/budget.hpp"
#include "twforge/graph.hpp"
#include "twforge/rng.hpp"

namespace twforge {

// Abstract pre-image tree for the line-graph kinds: host vertex i of H (in
// sorted order) plays the tree edge preimage_edge[i].
struct LinePreimage {
    int tree_n = 0;
    std::vector<std::pair<int, int>> preimage_edge;
};

struct ConnectifierCert {
    int kind = -1;  // 0..4
    int eta = 0;
    int sigma = 1;
    std::vector<int> h;       // host vertex set, sorted
    std::vector<int> s_hits;  // H cap S; path order for kind 2, wide order for 3/4
    int root = -1;            // kind 1
    LinePreimage preimage;    // kinds 0, 4
};

struct RecognizeResult {
    bool accepted = false;
    ConnectifierCert cert;
    // First failed clause per kind, when rejected.
    std::array<std::string, 5> reasons;
};

// Checks conditions (C0)..(C4) literally and returns the smallest matching
// kind. S-hit spacing is measured inside g[H].
RecognizeResult recognize_connectifier(const Graph& g, const std::vector<int>& H,
                                       const std::vector<int>& S, int eta, int sigma);

struct KindCheck {
    bool ok = false;
    std::string reason;
    ConnectifierCert cert;
};

// Single-kind variant used by the connectification recognizer.
KindCheck check_connectifier_kind(const Graph& g, const std::vector<int>& H,
                                  const std::vector<int>& S, int eta, int sigma, int kind);

// Whether the given order of Z(g[H]) is itself a sigma-wide enumeration,
// for a kind-3 caterpillar or kind-4 line graph of a caterpillar.
bool check_enumeration_sigma_wide(const Graph& g, const std::vector<int>& H, int kind,
                                  int sigma, const std::vector<int>& order);

struct BloatedTreeCert {
    std::vector<int> j;
    std::vector<std::vector<int>> big_cliques;
};

struct BloatedCheck {
    bool ok = false;
    std::string violation;
    std::vector<int> violating;  // vertices implicated in the first violation
    BloatedTreeCert cert;
};

// The three bloated-tree clauses plus a bounded redundant cycle-clique
// cross-check. Throws if g[J] is disconnected.
BloatedCheck verify_bloated_tree(const Graph& g, const std::vector<int>& J);

struct BloatedSearch {
    SearchStatus status = SearchStatus::None;
    BloatedTreeCert cert;
    int hits = 0;
};

// Best-effort search for an induced bloated tree hitting S at least k
// times: minimal connected seeds, local repair, pendant growth; exhaustive
// over induced subgraphs when the host is small. Output verified.
BloatedSearch find_bloated_tree(const Graph& g, const std::vector<int>& S, int k,
                                Budget& budget, Rng& rng);

struct ExtractionResult {
    bool ok = false;
    ConnectifierCert cert;
    std::vector<std::string> trace;
};

// The full extraction pipeline: bloated tree, minimality pruning, bump
// suppression, then dispatch on big clique / high degree / path /
// caterpillar, with sigma-gap subselection. Output always re-recognized.
ExtractionResult extract_connectifier(const Graph& g, const std::vector<int>& S, int eta,
                                      int sigma, Budget& budget, Rng& rng);

struct TripleWitness {
    int shape = 0;  // 1: center vertex + three paths; 2: triangle + three paths
    std::vector<int> h;
    int center = -1;
    std::vector<int> triangle;              // aligned with X order (shape 2)
    std::vector<std::vector<int>> paths;    // per X member, from center/triangle vertex to it
};

// Inclusion-minimal connected induced subgraph containing the three given
// vertices, classified into the two canonical shapes.
TripleWitness minimal_connected_triple(const Graph& g, const std::vector<int>& X,
                                       Rng* rng = nullptr);

}  // namespace twforge
