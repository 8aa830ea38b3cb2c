#include "twforge/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace twforge {

namespace {

// Subset DP over elimination prefixes for a compact graph on n <= 24
// vertices. f(S) = best width eliminating S first; q(S,v) counts the
// neighbors of v's S-closure, i.e. v's fill degree when eliminated after S.
struct SubsetDp {
    int n;
    std::vector<uint32_t> adj;

    explicit SubsetDp(const Graph& g) : n(g.n()), adj(g.n(), 0) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= uint32_t(1) << v;
            adj[v] |= uint32_t(1) << u;
        }
    }

    int fill_degree(uint32_t s, int v) const {
        uint32_t comp = uint32_t(1) << v;
        uint32_t nb = adj[v];
        uint32_t grow;
        while ((grow = (nb & s) & ~comp) != 0) {
            uint32_t f = grow;
            comp |= grow;
            while (f) {
                int u = __builtin_ctz(f);
                f &= f - 1;
                nb |= adj[u];
            }
        }
        return __builtin_popcount(nb & ~s & ~(uint32_t(1) << v));
    }

    std::pair<int, std::vector<int>> run() {
        std::vector<uint8_t> f(size_t(1) << n, 0);
        for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
            int best = 255;
            uint32_t it = s;
            while (it) {
                int v = __builtin_ctz(it);
                it &= it - 1;
                uint32_t rest = s & ~(uint32_t(1) << v);
                int cand = std::max<int>(f[rest], fill_degree(rest, v));
                best = std::min(best, cand);
            }
            f[s] = uint8_t(best);
        }
        // Reconstruct an optimal elimination order back to front.
        std::vector<int> order(n);
        uint32_t s = (n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1);
        for (int pos = n - 1; pos >= 0; --pos) {
            uint32_t it = s;
            int pick = -1;
            while (it) {
                int v = __builtin_ctz(it);
                it &= it - 1;
                uint32_t rest = s & ~(uint32_t(1) << v);
                if (std::max<int>(f[rest], fill_degree(rest, v)) == f[s]) {
                    pick = v;
                    break;
                }
            }
            order[pos] = pick;
            s &= ~(uint32_t(1) << pick);
        }
        int full = (n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1);
        return {f[full], order};
    }
};

// Bags from an elimination order; parent of a bag is the bag of the first
// later-eliminated fill neighbor.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    TreeDecomposition td;
    td.bags.resize(n);
    std::vector<std::pair<int, int>> tree_edges;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> later;
        for (int w = 0; w < n; ++w)
            if (w != v && adj[v][w] && pos[w] > i) later.push_back(w);
        td.bags[i] = later;
        td.bags[i].push_back(v);
        td.bags[i] = sorted_unique(std::move(td.bags[i]));
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                adj[later[a]][later[b]] = adj[later[b]][later[a]] = 1;
        if (!later.empty()) {
            int first = later[0];
            for (int w : later)
                if (pos[w] < pos[first]) first = w;
            tree_edges.emplace_back(i, pos[first]);
        } else if (i + 1 < n) {
            tree_edges.emplace_back(i, i + 1);
        }
    }
    td.tree = Graph(std::max(1, n), tree_edges);
    if (n == 0) td.bags.assign(1, {});
    return td;
}

}  // namespace

TreewidthResult exact_treewidth(const Graph& g, int limit) {
    TreewidthResult out;
    if (g.n() == 0) {
        out.width = -1;
        out.decomposition.tree = Graph(1);
        out.decomposition.bags = {{}};
        return out;
    }
    // Peel simplicial vertices; each contributes its degree as a lower
    // bound and re-attaches as a pendant bag afterwards.
    std::vector<char> removed(g.n(), 0);
    std::vector<std::pair<int, std::vector<int>>> peeled;  // vertex, neighbors at removal
    int lower = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n(); ++v) {
            if (removed[v]) continue;
            std::vector<int> nbrs;
            for (int w : g.neighbors(v))
                if (!removed[w]) nbrs.push_back(w);
            if (!is_clique(g, nbrs)) continue;
            // Keep at least one vertex.
            int left = 0;
            for (int u = 0; u < g.n(); ++u) left += !removed[u];
            if (left == 1) break;
            removed[v] = 1;
            peeled.emplace_back(v, nbrs);
            lower = std::max(lower, int(nbrs.size()));
            changed = true;
        }
    }
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) rest.push_back(v);
    if (int(rest.size()) > std::min(limit, 24)) return out;  // unknown
    auto sub = induced_subgraph(g, rest);
    SubsetDp dp(sub.graph);
    auto [w_rest, order_local] = dp.run();
    int width = std::max(lower, w_rest);
    TreeDecomposition td = decomposition_from_order(sub.graph, order_local);
    // Lift bag contents to host ids.
    for (auto& bag : td.bags)
        for (auto& v : bag) v = sub.to_host[v];
    // Re-attach peeled vertices in reverse order; their neighborhood is a
    // clique, hence inside some existing bag.
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        auto& [v, nbrs] = *it;
        int host_bag = 0;
        for (int b = 0; b < int(td.bags.size()); ++b) {
            bool all = true;
            for (int x : nbrs)
                if (!contains(td.bags[b], x)) all = false;
            if (all) {
                host_bag = b;
                break;
            }
        }
        std::vector<int> bag = nbrs;
        bag.push_back(v);
        bag = sorted_unique(std::move(bag));
        std::vector<std::pair<int, int>> es = td.tree.edges();
        es.emplace_back(host_bag, int(td.bags.size()));
        td.bags.push_back(bag);
        td.tree = Graph(int(td.bags.size()), es);
    }
    out.width = width;
    out.decomposition = std::move(td);
    return out;
}

DecompositionCheck validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    DecompositionCheck out;
    if (int(td.bags.size()) != td.tree.n())
        throw std::invalid_argument("validate_decomposition: bag count != tree size");
    for (const auto& bag : td.bags)
        for (int v : bag)
            if (v < 0 || v >= g.n())
                throw std::invalid_argument("validate_decomposition: bag vertex out of range");
    if (!is_tree(td.tree)) out.violations.push_back("tree: not a tree");
    std::vector<std::vector<int>> where(g.n());
    for (int b = 0; b < int(td.bags.size()); ++b)
        for (int v : td.bags[b]) where[v].push_back(b);
    for (int v = 0; v < g.n(); ++v)
        if (where[v].empty())
            out.violations.push_back("(i) vertex " + std::to_string(v) + " uncovered");
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int b : where[u])
            if (contains(sorted_unique(where[v]), b)) covered = true;
        if (!covered)
            out.violations.push_back("(ii) edge " + std::to_string(u) + "-" + std::to_string(v) +
                                     " uncovered");
    }
    for (int v = 0; v < g.n(); ++v) {
        if (where[v].empty()) continue;
        Bits allowed = to_bits(td.tree.n(), where[v]);
        auto comp = component_of(td.tree, where[v][0], allowed);
        if (comp.size() != sorted_unique(where[v]).size())
            out.violations.push_back("(iii) vertex " + std::to_string(v) +
                                     " induces a disconnected subtree");
    }
    out.valid = out.violations.empty();
    return out;
}

Graph torso(const Graph& g, const TreeDecomposition& td, int x, std::vector<int>* bag_vertices) {
    if (x < 0 || x >= td.tree.n()) throw std::invalid_argument("torso: invalid tree vertex");
    auto bag = sorted_unique(td.bags[x]);
    std::vector<int> idx(g.n(), -1);
    for (int i = 0; i < int(bag.size()); ++i) idx[bag[i]] = i;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < int(bag.size()); ++i)
        for (int w : g.neighbors(bag[i]))
            if (idx[w] > i) es.emplace_back(i, idx[w]);
    for (int y : td.tree.neighbors(x)) {
        auto adh = set_and(bag, sorted_unique(td.bags[y]));
        for (size_t i = 0; i < adh.size(); ++i)
            for (size_t j = i + 1; j < adh.size(); ++j) es.emplace_back(idx[adh[i]], idx[adh[j]]);
    }
    if (bag_vertices) *bag_vertices = bag;
    return Graph(int(bag.size()), es);
}

std::vector<std::vector<int>> adhesions(const TreeDecomposition& td) {
    std::vector<std::vector<int>> out;
    for (auto [x, y] : td.tree.edges())
        out.push_back(set_and(sorted_unique(td.bags[x]), sorted_unique(td.bags[y])));
    return out;
}

TightnessResult is_tight(const Graph& g, const TreeDecomposition& td) {
    TightnessResult res;
    for (int x = 0; x < td.tree.n(); ++x) {
        for (int y : td.tree.neighbors(x)) {
            // Side of y in tree - xy.
            Bits allowed(td.tree.n());
            for (int t = 0; t < td.tree.n(); ++t) allowed.set(t);
            allowed.reset(x);
            auto y_side = component_of(td.tree, y, allowed);
            std::vector<int> chi_y_side, chi_x_side;
            Bits on_y = to_bits(td.tree.n(), y_side);
            for (int t = 0; t < td.tree.n(); ++t) {
                for (int v : td.bags[t]) {
                    if (on_y.get(t))
                        chi_y_side.push_back(v);
                    else
                        chi_x_side.push_back(v);
                }
            }
            chi_y_side = sorted_unique(std::move(chi_y_side));
            chi_x_side = sorted_unique(std::move(chi_x_side));
            // chi(T_{x,y}) includes the adhesion, so the difference removes it.
            auto region = set_minus(chi_y_side, chi_x_side);
            auto adh = set_and(sorted_unique(td.bags[x]), sorted_unique(td.bags[y]));
            bool ok = false;
            if (!region.empty()) {
                auto sub = induced_subgraph(g, region);
                for (const auto& comp_local : components(sub.graph)) {
                    std::vector<int> comp;
                    for (int v : comp_local) comp.push_back(sub.to_host[v]);
                    Bits comp_bits = to_bits(g.n(), comp);
                    bool all = true;
                    for (int a : adh) {
                        bool has = false;
                        for (int w : g.neighbors(a))
                            if (comp_bits.get(w)) has = true;
                        if (!has) all = false;
                    }
                    if (all) {
                        ok = true;
                        break;
                    }
                }
            }
            if (!ok) {
                res.x = x;
                res.y = y;
                return res;
            }
        }
    }
    res.tight = true;
    return res;
}

MinorBound minor_lower_bound(const Graph& g, int theta,
                             const std::vector<std::vector<int>>& parts) {
    if (theta < 1) throw std::invalid_argument("minor_lower_bound: theta must be >= 1");
    MinorBound out;
    out.theta = theta;
    auto contracted = contract_sets(g, parts);
    const Graph& c = contracted.graph;
    // K_{theta,theta} subgraph search with common-neighbor narrowing.
    std::vector<int> a;
    std::function<bool(int, std::vector<int>)> pick = [&](int from, std::vector<int> common) {
        if (int(a.size()) == theta) {
            auto b_cand = set_minus(sorted_unique(common), sorted_unique(a));
            if (int(b_cand.size()) < theta) return false;
            out.certified = true;
            out.side_a = a;
            out.side_b = std::vector<int>(b_cand.begin(), b_cand.begin() + theta);
            return true;
        }
        for (int v = from; v < c.n(); ++v) {
            if (c.degree(v) < theta) continue;
            std::vector<int> next;
            if (a.empty()) {
                next = c.neighbors(v);
            } else {
                for (int w : common)
                    if (c.has_edge(v, w)) next.push_back(w);
            }
            if (int(next.size()) < theta) continue;
            a.push_back(v);
            if (pick(v + 1, next)) return true;
            a.pop_back();
        }
        return false;
    };
    pick(0, {});
    return out;
}

}  // namespace twforge
