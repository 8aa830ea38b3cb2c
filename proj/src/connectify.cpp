#include "twforge/connectify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "twforge/blocks.hpp"
#include "twforge/pattern.hpp"
#include "twforge/starforest.hpp"

namespace twforge {

ForestShape uniform_forest(int theta, int delta, int lambda) {
    ForestShape f;
    for (int i = 0; i < theta; ++i) {
        StarShape s;
        s.stem_lengths.assign(delta, lambda);
        f.push_back(s);
    }
    return f;
}

ForestShape shape_of(const RootedStarForest& f) {
    ForestShape out;
    for (const auto& c : f.components) {
        StarShape s;
        for (const auto& stem : c.stems) s.stem_lengths.push_back(int(stem.size()) - 1);
        std::sort(s.stem_lengths.begin(), s.stem_lengths.end());
        out.push_back(s);
    }
    return out;
}

namespace {

struct FreshGraph {
    std::vector<std::pair<int, int>> edges;
    int next = 0;

    int vertex() { return next++; }
    void edge(int a, int b) { edges.emplace_back(a, b); }
    // Appends a fresh path of `len` edges between two existing vertices.
    void join(int a, int b, int len) {
        int prev = a;
        for (int i = 1; i < len; ++i) {
            int v = vertex();
            edge(prev, v);
            prev = v;
        }
        edge(prev, b);
    }
    // Fresh pendant path of `len` edges from `a`; returns the far end.
    int pend(int a, int len) {
        int prev = a;
        for (int i = 0; i < len; ++i) {
            int v = vertex();
            edge(prev, v);
            prev = v;
        }
        return prev;
    }
};

}  // namespace

BuildResult build_connectification(const ForestShape& f, const std::vector<int>& pi_order,
                                   int kind, int sigma) {
    int theta = int(f.size());
    if (theta < 2) throw std::invalid_argument("build_connectification: need at least two components");
    if (kind < 1 || kind > 4) throw std::invalid_argument("build_connectification: kind must be 1..4");
    if (sigma < 1) throw std::invalid_argument("build_connectification: sigma must be >= 1");
    std::vector<int> order = pi_order;
    if (order.empty()) {
        order.resize(theta);
        for (int i = 0; i < theta; ++i) order[i] = i;
    }
    if (int(order.size()) != theta || sorted_unique(order) != [&] {
            std::vector<int> idx(theta);
            for (int i = 0; i < theta; ++i) idx[i] = i;
            return idx;
        }())
        throw std::invalid_argument("build_connectification: pi must permute the components");

    FreshGraph fg;
    BuildResult out;
    out.cert.sigma = sigma;
    out.cert.kind = kind;
    // Forest first.
    std::vector<int> roots(theta);
    for (int c = 0; c < theta; ++c) {
        int r = fg.vertex();
        roots[c] = r;
        RootedStarForest::Component comp;
        comp.root = r;
        for (int len : f[c].stem_lengths) {
            int prev = r;
            std::vector<int> stem{r};
            for (int i = 0; i < len; ++i) {
                int v = fg.vertex();
                fg.edge(prev, v);
                stem.push_back(v);
                prev = v;
            }
            std::reverse(stem.begin(), stem.end());  // leaf -> root
            comp.stems.push_back(std::move(stem));
        }
        out.cert.f.components.push_back(std::move(comp));
    }
    std::vector<int> pi_hosts;
    for (int i = 0; i < theta; ++i) pi_hosts.push_back(roots[order[i]]);
    // Contact gaps of at least two keep the roots pairwise non-adjacent, so
    // F stays induced.
    int gap = std::max(sigma, 2);
    std::vector<int> h_verts = pi_hosts;
    if (kind == 1) {
        int r = fg.vertex();
        h_verts.push_back(r);
        int stem_len = std::max(sigma, 2);
        for (int i = 0; i < theta; ++i) {
            int at = fg.next;
            fg.join(r, pi_hosts[i], stem_len);
            for (int v = at; v < fg.next; ++v) h_verts.push_back(v);
        }
    } else if (kind == 2) {
        for (int i = 0; i + 1 < theta; ++i) {
            int at = fg.next;
            fg.join(pi_hosts[i], pi_hosts[i + 1], gap);
            for (int v = at; v < fg.next; ++v) h_verts.push_back(v);
        }
    } else if (kind == 3) {
        // Spine: pi(1) - b_2 - .. - b_{theta-1} - pi(theta); middle roots
        // hang from their branch vertices by unit stems.
        std::vector<int> branch;
        int prev = pi_hosts[0];
        for (int i = 1; i + 1 < theta; ++i) {
            int at = fg.next;
            int b = fg.vertex();
            fg.join(prev, b, gap);
            for (int v = at; v < fg.next; ++v) h_verts.push_back(v);
            branch.push_back(b);
            fg.edge(b, pi_hosts[i]);
            prev = b;
        }
        int at = fg.next;
        fg.join(prev, pi_hosts[theta - 1], gap);
        for (int v = at; v < fg.next; ++v) h_verts.push_back(v);
    } else {
        // Line graph of a sigma-caterpillar, leaf edges identified with the
        // roots. Build the caterpillar abstractly, then its line graph.
        int cat_gap = (theta == 2) ? std::max(sigma, 3) : gap;
        std::vector<std::pair<int, int>> ce;
        int cn = 0;
        auto cv = [&] { return cn++; };
        std::vector<int> leaf_edge_id(theta, -1);  // index into ce
        int spine_prev = cv();
        // leaf l_1 is spine_prev; its leaf edge is the first spine edge.
        std::vector<int> branches;
        for (int i = 1; i + 1 < theta; ++i) {
            // gap edges to branch b_i
            for (int e = 0; e < cat_gap; ++e) {
                int nxt = cv();
                ce.emplace_back(spine_prev, nxt);
                if (i == 1 && e == 0) leaf_edge_id[0] = int(ce.size()) - 1;
                spine_prev = nxt;
            }
            branches.push_back(spine_prev);
            int leaf = cv();
            ce.emplace_back(spine_prev, leaf);
            leaf_edge_id[i] = int(ce.size()) - 1;
        }
        for (int e = 0; e < cat_gap; ++e) {
            int nxt = cv();
            ce.emplace_back(spine_prev, nxt);
            if (theta == 2 && e == 0) leaf_edge_id[0] = int(ce.size()) - 1;
            spine_prev = nxt;
        }
        leaf_edge_id[theta - 1] = int(ce.size()) - 1;
        // Host vertices for caterpillar edges.
        std::vector<int> edge_host(ce.size(), -1);
        for (int i = 0; i < theta; ++i) edge_host[leaf_edge_id[i]] = pi_hosts[i];
        for (size_t e = 0; e < ce.size(); ++e)
            if (edge_host[e] == -1) {
                edge_host[e] = fg.vertex();
                h_verts.push_back(edge_host[e]);
            }
        for (size_t e1 = 0; e1 < ce.size(); ++e1)
            for (size_t e2 = e1 + 1; e2 < ce.size(); ++e2) {
                bool share = ce[e1].first == ce[e2].first || ce[e1].first == ce[e2].second ||
                             ce[e1].second == ce[e2].first || ce[e1].second == ce[e2].second;
                if (share) fg.edge(edge_host[e1], edge_host[e2]);
            }
    }
    out.graph = Graph(fg.next, fg.edges);
    out.cert.x = sorted_unique(roots);
    out.cert.pi = pi_hosts;
    std::vector<int> xi;
    for (const auto& comp : out.cert.f.components) {
        xi.push_back(comp.root);
        for (const auto& stem : comp.stems) xi.insert(xi.end(), stem.begin(), stem.end());
    }
    xi.insert(xi.end(), h_verts.begin(), h_verts.end());
    out.cert.xi = sorted_unique(std::move(xi));
    auto h_sorted = sorted_unique(h_verts);
    auto kc = check_connectifier_kind(out.graph, h_sorted, out.cert.x, theta, sigma, kind);
    if (!kc.ok)
        throw std::logic_error("build_connectification: built connectifier fails its own check: " +
                               kc.reason);
    out.cert.h_cert = kc.cert;
    return out;
}

ConnectificationCheck recognize_connectification(const Graph& g,
                                                 const ConnectificationCert& cert) {
    ConnectificationCheck out;
    if (cert.kind < 1 || cert.kind > 4) {
        out.violation = "kind must be in 1..4";
        return out;
    }
    if (int(cert.x.size()) < 2) {
        out.violation = "|X| must be at least 2";
        return out;
    }
    if (!check_forest_in_host(g, cert.f)) {
        out.violation = "forest is not realized exactly in the host";
        return out;
    }
    auto f_verts = cert.f.all_vertices();
    auto x = sorted_unique(cert.x);
    if (!set_minus(x, f_verts).empty()) {
        out.violation = "X is not inside F";
        return out;
    }
    auto xi = sorted_unique(cert.xi);
    if (!set_minus(f_verts, xi).empty()) {
        out.violation = "F is not inside Xi";
        return out;
    }
    auto f_minus_x = set_minus(f_verts, x);
    auto h = set_minus(xi, f_minus_x);
    if (sorted_unique(cert.h_cert.h) != h) {
        out.violation = "H certificate does not match Xi minus (F minus X)";
        return out;
    }
    auto xi_minus_f = set_minus(xi, f_verts);
    if (!f_minus_x.empty() && !xi_minus_f.empty() &&
        !is_anticomplete(g, f_minus_x, xi_minus_f)) {
        out.violation = "F minus X is not anticomplete to Xi minus F";
        return out;
    }
    auto kc = check_connectifier_kind(g, h, x, int(x.size()), cert.sigma, cert.kind);
    if (!kc.ok) {
        out.violation = "H fails condition (C" + std::to_string(cert.kind) + "): " + kc.reason;
        return out;
    }
    // pi-order clauses.
    auto pi = cert.pi;
    if (sorted_unique(pi) != x) {
        out.violation = "pi is not an ordering of X";
        return out;
    }
    if (cert.kind == 2) {
        auto hits = kc.cert.s_hits;  // path order
        auto rev = hits;
        std::reverse(rev.begin(), rev.end());
        if (hits != pi && rev != pi) {
            out.violation = "pi is not the traversal order of the widening";
            return out;
        }
    } else if (cert.kind == 3 || cert.kind == 4) {
        if (!check_enumeration_sigma_wide(g, h, cert.kind, cert.sigma, pi)) {
            out.violation = "pi is not a sigma-wide enumeration of Z(H)";
            return out;
        }
    }
    out.valid = true;
    return out;
}

namespace {

// Two-pointer injection of target stem lengths into donor stems.
std::optional<StemAssignment> inject_stems(const StarShape& donor, const StarShape& target,
                                           bool allow_truncation) {
    std::vector<std::pair<int, int>> donors;  // (length, index)
    for (int i = 0; i < donor.degree(); ++i) donors.emplace_back(donor.stem_lengths[i], i);
    std::sort(donors.begin(), donors.end());
    std::vector<std::pair<int, int>> targets;
    for (int i = 0; i < target.degree(); ++i) targets.emplace_back(target.stem_lengths[i], i);
    std::sort(targets.begin(), targets.end());
    StemAssignment out;
    out.donor_stem.assign(target.degree(), -1);
    out.truncate_to.assign(target.degree(), 0);
    size_t d = 0;
    for (auto [len, idx] : targets) {
        while (d < donors.size() &&
               (allow_truncation ? donors[d].first < len : donors[d].first != len))
            ++d;
        if (d == donors.size()) return std::nullopt;
        out.donor_stem[idx] = donors[d].second;
        out.truncate_to[idx] = len;
        ++d;
    }
    return out;
}

}  // namespace

EmbedWitness embed_forest(const ForestShape& f1, const ForestShape& f2, bool allow_truncation) {
    EmbedWitness out;
    int n2 = int(f2.size());
    out.per_component.assign(n2, {});
    std::vector<char> used(f1.size(), 0);
    std::function<bool(int)> match = [&](int i) -> bool {
        if (i == n2) return true;
        for (int j = 0; j < int(f1.size()); ++j) {
            if (used[j]) continue;
            auto asg = inject_stems(f1[j], f2[i], allow_truncation);
            if (!asg) continue;
            asg->donor_component = j;
            out.per_component[i] = *asg;
            used[j] = 1;
            if (match(i + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    out.ok = match(0);
    return out;
}

ReduceResult reduce_to_subforest(const Graph& host, const ConnectificationCert& plus_cert,
                                 const ForestShape& target) {
    ReduceResult out;
    if (target.size() != plus_cert.pi.size()) {
        out.failure = "target size differs from |X|";
        return out;
    }
    ConnectificationCert cert = plus_cert;
    cert.f.components.clear();
    std::vector<int> xi;
    for (int i = 0; i < int(target.size()); ++i) {
        int root = plus_cert.pi[i];
        const RootedStarForest::Component* comp = nullptr;
        for (const auto& c : plus_cert.f.components)
            if (c.root == root) comp = &c;
        if (!comp) {
            out.failure = "pi entry without a forest component";
            return out;
        }
        StarShape raw;
        for (const auto& stem : comp->stems) raw.stem_lengths.push_back(int(stem.size()) - 1);
        auto asg_raw = inject_stems(raw, target[i], true);
        if (!asg_raw) {
            out.failure = "component at pi(" + std::to_string(i + 1) +
                          ") cannot host the target component";
            return out;
        }
        RootedStarForest::Component kept;
        kept.root = comp->root;
        for (int s = 0; s < target[i].degree(); ++s) {
            const auto& donor = comp->stems[asg_raw->donor_stem[s]];
            int keep_len = asg_raw->truncate_to[s];
            // Stems run leaf -> root; leaf-side truncation keeps the tail.
            std::vector<int> stem(donor.end() - (keep_len + 1), donor.end());
            kept.stems.push_back(std::move(stem));
        }
        cert.f.components.push_back(kept);
        xi.push_back(kept.root);
        for (const auto& stem : kept.stems) xi.insert(xi.end(), stem.begin(), stem.end());
    }
    xi.insert(xi.end(), plus_cert.h_cert.h.begin(), plus_cert.h_cert.h.end());
    cert.xi = sorted_unique(std::move(xi));
    auto chk = recognize_connectification(host, cert);
    if (!chk.valid) {
        out.failure = "reduced certificate rejected: " + chk.violation;
        return out;
    }
    out.ok = true;
    out.cert = std::move(cert);
    return out;
}

PipelineResult pipeline(const Graph& g, int t, const ForestShape& f, int sigma,
                        const PipelineOptions& opt, Budget& budget, Rng& rng) {
    PipelineResult res;
    auto& trace = res.trace;
    int theta = int(f.size());
    if (theta < 2 || sigma < 1 || t < 2)
        throw std::invalid_argument("pipeline: need |F|>=2, sigma>=1, t>=2");
    int delta_target = 0, lambda_target = 1;
    for (const auto& c : f) {
        delta_target = std::max(delta_target, c.degree());
        lambda_target = std::max(lambda_target, c.reach());
    }

    // Step 1: t-cleanness at desk scale.
    auto rep = is_t_clean(g, t, budget);
    if (rep.kind != ObstructionReport::Kind::None) {
        trace.push_back("step clean-check: obstruction found; refusing");
        return res;
    }
    trace.push_back(rep.budget_exhausted ? "step clean-check: no obstruction (budget-limited)"
                                         : "step clean-check: no obstruction");

    // Step 2: strong block.
    auto block = find_strong_block(g, opt.block_k, budget);
    if (!block) {
        trace.push_back("step strong-block: none found at k=" + std::to_string(opt.block_k));
        return res;
    }
    trace.push_back("step strong-block: |B| = " + std::to_string(block->b.size()));

    // Step 3: distance refinement at d = 2*sigma-1 (also covers 2*lambda+1
    // when the caller sizes sigma accordingly).
    int d = std::max(2 * sigma - 1, 2 * lambda_target + 1);
    int want_roots = std::min<int>(int(block->b.size()), theta + opt.refine_extra);
    auto refine = distance_refine(g, block->b, std::min<int>(int(block->b.size()), opt.x_size), d,
                                  std::max(2, want_roots), budget);
    if (!refine.ok || refine.achieved < 2) {
        trace.push_back("step distance-refine: stable refinement too small (achieved " +
                        std::to_string(refine.achieved) + ")");
        return res;
    }
    trace.push_back("step distance-refine: |S| = " + std::to_string(refine.s.size()) +
                    ", |A| = " + std::to_string(refine.a.size()));
    Bits gone = to_bits(g.n(), refine.a);
    std::vector<int> keep0;
    for (int v = 0; v < g.n(); ++v)
        if (!gone.get(v)) keep0.push_back(v);
    auto g0 = induced_subgraph(g, keep0);
    std::vector<int> s0;
    for (int v : refine.s) s0.push_back(g0.from_host[v]);
    s0 = sorted_unique(std::move(s0));

    // Step 4: plant stars of boosted degree.
    int delta_plant = delta_target + opt.plant_slack;
    auto planted = plant_forest(g0.graph, s0, std::min<int>(int(s0.size()), theta + opt.refine_extra),
                                delta_plant, lambda_target);
    if (!planted.ok || int(planted.forest.size()) < theta) {
        trace.push_back("step plant-forest: " +
                        (planted.failure.empty() ? std::string("insufficient stars")
                                                 : planted.failure));
        return res;
    }
    trace.push_back("step plant-forest: planted " + std::to_string(planted.forest.size()) +
                    " stars of degree " + std::to_string(delta_plant));

    // Step 5: remove heavy-contact vertices (>= 2t neighbors in F).
    auto f_verts = planted.forest.all_vertices();
    Bits fbits = to_bits(g0.graph.n(), f_verts);
    std::vector<int> w_set;
    for (int v = 0; v < g0.graph.n(); ++v) {
        if (fbits.get(v)) continue;
        int cnt = 0;
        for (int u : g0.graph.neighbors(v)) cnt += fbits.get(u);
        if (cnt >= 2 * t) w_set.push_back(v);
    }
    trace.push_back("step heavy-removal: |W| = " + std::to_string(w_set.size()));
    Bits wbits = to_bits(g0.graph.n(), w_set);
    std::vector<int> keep1;
    for (int v = 0; v < g0.graph.n(); ++v)
        if (!wbits.get(v)) keep1.push_back(v);
    auto g1 = induced_subgraph(g0.graph, keep1);
    // Forest in g1 coordinates.
    RootedStarForest forest1;
    for (const auto& c : planted.forest.components) {
        RootedStarForest::Component cc;
        cc.root = g1.from_host[c.root];
        for (const auto& stem : c.stems) {
            std::vector<int> st;
            for (int v : stem) st.push_back(g1.from_host[v]);
            if (std::find(st.begin(), st.end(), -1) != st.end()) {
                cc.root = -1;
                break;
            }
            cc.stems.push_back(std::move(st));
        }
        if (cc.root != -1) forest1.components.push_back(std::move(cc));
    }
    if (int(forest1.size()) < theta) {
        trace.push_back("step heavy-removal: removed vertices broke planted stars");
        return res;
    }

    // Step 6: contract each star to its root.
    std::vector<std::vector<int>> parts;
    for (const auto& c : forest1.components) {
        std::vector<int> part{c.root};
        for (const auto& stem : c.stems) part.insert(part.end(), stem.begin(), stem.end());
        parts.push_back(sorted_unique(std::move(part)));
    }
    auto g2 = contract_sets(g1.graph, parts);
    std::vector<int> roots2;
    for (int i = 0; i < int(parts.size()); ++i) roots2.push_back(i);

    // Step 7: first extraction on the contracted graph.
    int eta1 = std::min<int>(int(roots2.size()), std::max(sigma * theta, theta + 1));
    ExtractionResult ex1;
    for (int target_eta = eta1; target_eta >= theta; --target_eta) {
        ex1 = extract_connectifier(g2.graph, roots2, target_eta, 1, budget, rng);
        if (ex1.ok) break;
    }
    if (!ex1.ok) {
        trace.push_back("step contracted-extraction: no connectifier among contracted roots");
        return res;
    }
    if (ex1.cert.kind == 0) {
        trace.push_back("step contracted-extraction: type-0 connectifier in a clean host");
        return res;
    }
    trace.push_back("step contracted-extraction: kind " + std::to_string(ex1.cert.kind) +
                    " with " + std::to_string(ex1.cert.s_hits.size()) + " roots");

    // Step 8: undo the contraction.
    std::vector<int> h1;
    std::vector<int> hit_roots;  // component indices of the hit roots
    for (int v : ex1.cert.h) {
        if (v < int(parts.size())) {
            for (int u : parts[v]) h1.push_back(u);
            hit_roots.push_back(v);
        } else {
            // Non-root contracted vertex: maps back to a g1 vertex.
            for (int u = 0; u < g1.graph.n(); ++u)
                if (g2.image[u] == v) h1.push_back(u);
        }
    }
    h1 = sorted_unique(std::move(h1));
    std::vector<int> s_roots;  // g1 ids of the roots inside H1
    for (int c : hit_roots) s_roots.push_back(forest1.components[c].root);
    s_roots = sorted_unique(std::move(s_roots));

    // Step 9: per-root boundary control and clean-star pruning.
    Bits h1b = to_bits(g1.graph.n(), h1);
    std::map<int, RootedStarForest::Component> kept_star;  // root -> clean stems (full length)
    for (int c : hit_roots) {
        const auto& comp = forest1.components[c];
        std::vector<int> body;
        for (const auto& stem : comp.stems)
            for (int v : stem)
                if (v != comp.root) body.push_back(v);
        body = sorted_unique(std::move(body));
        Bits bodyb = to_bits(g1.graph.n(), body);
        // Contacts of H1 minus this star into the star body.
        std::vector<int> outside;
        for (int v : h1)
            if (!bodyb.get(v) && v != comp.root) outside.push_back(v);
        Bits touched(g1.graph.n());
        for (int v : outside)
            for (int u : g1.graph.neighbors(v))
                if (bodyb.get(u)) touched.set(u);
        int boundary = touched.count();
        if (boundary >= 2 * t * std::max(1, eta1)) {
            trace.push_back("step star-pruning: boundary bound violated at a root");
            return res;
        }
        RootedStarForest::Component clean;
        clean.root = comp.root;
        for (const auto& stem : comp.stems) {
            bool dirty = false;
            for (int v : stem)
                if (v != comp.root && touched.get(v)) dirty = true;
            if (!dirty) clean.stems.push_back(stem);
        }
        if (int(clean.stems.size()) < delta_target) {
            trace.push_back("step star-pruning: fewer than delta clean stems at a root");
            return res;
        }
        clean.stems.resize(delta_target);
        kept_star[comp.root] = clean;
    }
    trace.push_back("step star-pruning: clean stars at " + std::to_string(kept_star.size()) +
                    " roots");

    // Step 10: second extraction on H1 minus the kept star bodies.
    std::vector<int> drop;
    for (auto& [root, comp] : kept_star)
        for (const auto& stem : comp.stems)
            for (int v : stem)
                if (v != root) drop.push_back(v);
    auto h1p = set_minus(h1, sorted_unique(drop));
    auto sub2 = induced_subgraph(g1.graph, h1p);
    if (!is_connected(sub2.graph)) {
        trace.push_back("step reduced-extraction: pruned region disconnected");
        return res;
    }
    std::vector<int> s2;
    for (int r : s_roots) s2.push_back(sub2.from_host[r]);
    auto ex2 = extract_connectifier(sub2.graph, sorted_unique(s2), theta, sigma, budget, rng);
    if (!ex2.ok || ex2.cert.kind == 0) {
        trace.push_back("step reduced-extraction: no sigma-connectifier over the roots");
        return res;
    }
    trace.push_back("step reduced-extraction: kind " + std::to_string(ex2.cert.kind));

    // Step 11: assemble Xi and emit against the original host graph.
    auto lift = [&](int v) { return g0.to_host[g1.to_host[sub2.to_host[v]]]; };
    ConnectificationCert cert;
    cert.sigma = sigma;
    cert.kind = ex2.cert.kind;
    std::vector<int> hit_order;  // pi as host vertices, in enumeration order
    for (int v : ex2.cert.s_hits) hit_order.push_back(lift(v));
    cert.pi = hit_order;
    cert.x = sorted_unique(hit_order);
    // Target components assigned in enumeration order.
    std::vector<int> xi;
    for (int i = 0; i < theta; ++i) {
        int root_host = hit_order[i];
        // find the matching kept star (g1 ids).
        int root_g1 = -1;
        for (auto& [rg1, comp] : kept_star)
            if (g0.to_host[g1.to_host[rg1]] == root_host) root_g1 = rg1;
        if (root_g1 == -1) {
            trace.push_back("step assembly: hit root without a kept star");
            return res;
        }
        const auto& comp = kept_star[root_g1];
        StarShape raw;
        for (const auto& stem : comp.stems) raw.stem_lengths.push_back(int(stem.size()) - 1);
        auto asg = inject_stems(raw, f[i], true);
        if (!asg) {
            trace.push_back("step assembly: kept star cannot host the target component");
            return res;
        }
        RootedStarForest::Component final_comp;
        final_comp.root = root_host;
        for (int s = 0; s < f[i].degree(); ++s) {
            const auto& donor = comp.stems[asg->donor_stem[s]];
            int keep_len = asg->truncate_to[s];
            std::vector<int> stem(donor.end() - (keep_len + 1), donor.end());
            for (auto& v : stem) v = g0.to_host[g1.to_host[v]];
            final_comp.stems.push_back(std::move(stem));
        }
        cert.f.components.push_back(final_comp);
        xi.push_back(final_comp.root);
        for (const auto& stem : final_comp.stems) xi.insert(xi.end(), stem.begin(), stem.end());
    }
    std::vector<int> h_host;
    for (int v : ex2.cert.h) h_host.push_back(lift(v));
    auto kc = check_connectifier_kind(g, sorted_unique(h_host), cert.x, theta, sigma, cert.kind);
    if (!kc.ok) {
        trace.push_back("step assembly: connectifier no longer verifies in the host: " + kc.reason);
        return res;
    }
    cert.h_cert = kc.cert;
    xi.insert(xi.end(), h_host.begin(), h_host.end());
    cert.xi = sorted_unique(std::move(xi));
    auto chk = recognize_connectification(g, cert);
    if (!chk.valid) {
        trace.push_back("step assembly: certificate rejected: " + chk.violation);
        return res;
    }
    trace.push_back("done: sigma-connectification recognized");
    res.ok = true;
    res.cert = std::move(cert);
    return res;
}

}  // namespace twforge
