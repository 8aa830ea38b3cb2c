#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twforge/budget.hpp"
#include "twforge/connectifier.hpp"
#include "twforge/generators.hpp"
#include "twforge/graph.hpp"
#include "twforge/rng.hpp"

namespace twforge {

// Abstract rooted subdivided star: one entry per stem, its length.
struct StarShape {
    std::vector<int> stem_lengths;

    int degree() const { return int(stem_lengths.size()); }
    int reach() const {
        int r = 0;
        for (int l : stem_lengths) r = std::max(r, l);
        return r;
    }
};

using ForestShape = std::vector<StarShape>;

ForestShape uniform_forest(int theta, int delta, int lambda);
ForestShape shape_of(const RootedStarForest& f);

struct ConnectificationCert {
    int sigma = 1;
    int kind = 1;  // of H, in 1..4
    std::vector<int> xi;
    RootedStarForest f;
    std::vector<int> x;   // attachment set, sorted
    std::vector<int> pi;  // pi(1), .., pi(|X|) as host vertices
    ConnectifierCert h_cert;
};

struct BuildResult {
    Graph graph;
    ConnectificationCert cert;
};

// Synthesizes a fresh sigma-connectification of (F, R(F)) with respect to
// pi: F glued to a kind-appropriate connectifier only at its roots, with
// contact gaps wide enough to keep F induced.
BuildResult build_connectification(const ForestShape& f, const std::vector<int>& pi_order,
                                   int kind, int sigma);

struct ConnectificationCheck {
    bool valid = false;
    std::string violation;
};

// Literal clause checking of the definition; H delegated to the
// connectifier recognizer at the claimed kind, plus the pi-order clauses
// for kinds 2-4.
ConnectificationCheck recognize_connectification(const Graph& g,
                                                 const ConnectificationCert& cert);

struct StemAssignment {
    int donor_component = -1;
    std::vector<int> donor_stem;      // per target stem, donor stem index
    std::vector<int> truncate_to;     // per target stem, kept length
};

struct EmbedWitness {
    bool ok = false;
    std::vector<StemAssignment> per_component;  // aligned with target components
};

// F2 embeds in F1 by deleting whole stems; stems may additionally be
// truncated on the leaf side (reach slack), controlled by allow_truncation.
EmbedWitness embed_forest(const ForestShape& f1, const ForestShape& f2,
                          bool allow_truncation = true);

struct ReduceResult {
    bool ok = false;
    std::string failure;
    ConnectificationCert cert;  // reduced certificate against the same host
};

// Replaces each component of the host connectification's forest by an
// embedded copy of the corresponding target component (stem deletion plus
// leaf-side truncation), yielding a connectification of the target forest.
ReduceResult reduce_to_subforest(const Graph& host, const ConnectificationCert& plus_cert,
                                 const ForestShape& target);

struct PipelineOptions {
    int block_k = 2;
    int x_size = 8;
    int plant_slack = 2;
    int refine_extra = 1;  // extra stars beyond |F| to plant when possible
};

struct PipelineResult {
    bool ok = false;
    ConnectificationCert cert;
    std::vector<std::string> trace;
};

// The end-to-end desk-scale chain: clean check, strong block, distance
// refinement, star planting, heavy-contact removal, contraction,
// connectifier extraction twice, star pruning, assembly. Every intermediate
// is verified; the first unachievable step names itself in the trace.
PipelineResult pipeline(const Graph& g, int t, const ForestShape& f, int sigma,
                        const PipelineOptions& opt, Budget& budget, Rng& rng);

}  // namespace twforge
