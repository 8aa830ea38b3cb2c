#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twforge/budget.hpp"
#include "twforge/generators.hpp"
#include "twforge/graph.hpp"

namespace twforge {

struct StarWitness {
    bool ok = false;
    std::string failure;
    int root = -1;
    std::vector<std::vector<int>> stems;  // leaf -> root, inclusive
    bool gamma_clique_found = false;      // conflict-graph diagnostic
    std::vector<int> gamma_clique;        // indices of mutually touching prefixes
};

// Plants a copy of S_{delta,lambda} rooted at x: routes internally disjoint
// paths toward a partner in S, truncates to length-lambda prefixes, and
// takes an independent set in the prefix conflict graph.
StarWitness plant_star(const Graph& g, const std::vector<int>& s, int x, int delta, int lambda);

struct PlantedForestCert {
    bool ok = false;
    std::string failure;
    RootedStarForest forest;
    std::vector<int> s;
};

// theta stars at distinct S vertices; components re-verified pairwise
// anticomplete in the host.
PlantedForestCert plant_forest(const Graph& g, const std::vector<int>& s, int theta, int delta,
                               int lambda);

bool check_planted(const Graph& g, const PlantedForestCert& cert);

struct HoleExtraction {
    bool ok = false;
    std::string failure;
    std::vector<int> cycle;
};

// Two internally disjoint S-S paths with anticomplete lambda-prefixes give
// an induced cycle of length at least lambda+3 via the first-attachment scan.
HoleExtraction extract_long_hole(const Graph& g, const std::vector<int>& s, int lambda);

}  // namespace twforge
