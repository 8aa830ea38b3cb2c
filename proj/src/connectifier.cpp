#include "twforge/connectifier.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace twforge {

namespace {

// ---- small structural helpers on local graphs ----

bool is_path_graph(const Graph& g) {
    if (g.n() == 0) return false;
    if (g.n() == 1) return g.m() == 0;
    int ends = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) > 2) return false;
        if (g.degree(v) == 1) ++ends;
    }
    return ends == 2 && g.m() == g.n() - 1 && is_connected(g);
}

std::vector<int> path_order(const Graph& g) {
    // Vertices of a path graph in order, starting at the smaller endpoint.
    if (g.n() == 1) return {0};
    int start = -1;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1) {
            start = v;
            break;
        }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (int(order.size()) < g.n()) {
        int nxt = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) nxt = w;
        if (nxt == -1) break;
        order.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return order;
}

std::vector<int> tree_path(const Graph& t, int u, int v) {
    Bits all(t.n());
    for (int i = 0; i < t.n(); ++i) all.set(i);
    std::vector<int> par(t.n(), -1), dist = bfs_distances(t, u, all);
    // Recompute parents with a BFS.
    std::deque<int> q{u};
    std::vector<char> seen(t.n(), 0);
    seen[u] = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (int w : t.neighbors(a))
            if (!seen[w]) {
                seen[w] = 1;
                par[w] = a;
                q.push_back(w);
            }
    }
    std::vector<int> path;
    for (int x = v; x != -1; x = par[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// ---- caterpillar recognition ----

struct CatCheck {
    bool is_caterpillar = false;
    bool sigma_wide = false;
    std::vector<int> leaf_order;  // sigma-wide enumeration when sigma_wide
    std::string reason;
};

// Walks a bare leg from `from` away from `at`; returns (leaf, length).
std::pair<int, int> walk_leg(const Graph& t, int at, int from) {
    int prev = at, cur = from, len = 1;
    while (t.degree(cur) == 2) {
        int nxt = -1;
        for (int w : t.neighbors(cur))
            if (w != prev) nxt = w;
        prev = cur;
        cur = nxt;
        ++len;
    }
    return {cur, len};
}

CatCheck check_sigma_caterpillar(const Graph& t, int sigma) {
    CatCheck out;
    if (!is_tree(t)) {
        out.reason = "not a tree";
        return out;
    }
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) > 3) {
            out.reason = "degree above three";
            return out;
        }
    std::vector<int> branch;
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) == 3) branch.push_back(v);
    if (t.n() == 1) {
        out.is_caterpillar = true;
        out.sigma_wide = true;
        out.leaf_order = {0};
        return out;
    }
    if (branch.empty()) {
        out.is_caterpillar = true;
        auto order = path_order(t);
        if (int(order.size()) - 1 >= sigma) {
            out.sigma_wide = true;
            out.leaf_order = {order.front(), order.back()};
        } else {
            out.reason = "path shorter than sigma";
        }
        return out;
    }
    if (branch.size() == 1) {
        out.is_caterpillar = true;
        int b = branch[0];
        std::vector<std::pair<int, int>> legs;  // (leaf, length)
        for (int w : t.neighbors(b)) legs.push_back(walk_leg(t, b, w));
        std::sort(legs.begin(), legs.end(),
                  [](auto& x, auto& y) { return x.second > y.second; });
        if (legs[0].second >= sigma && legs[1].second >= sigma) {
            out.sigma_wide = true;
            out.leaf_order = {legs[0].first, legs[2].first, legs[1].first};
        } else {
            out.reason = "fewer than two legs of length sigma";
        }
        return out;
    }
    // All branch vertices must lie on the path between the two extremal ones.
    int b1 = branch[0], b2 = branch[0];
    int best = -1;
    for (int x : branch)
        for (int y : branch) {
            int d = int(tree_path(t, x, y).size());
            if (d > best) {
                best = d;
                b1 = x;
                b2 = y;
            }
        }
    auto q = tree_path(t, b1, b2);
    Bits on_q = to_bits(t.n(), q);
    for (int x : branch)
        if (!on_q.get(x)) {
            out.reason = "branch vertices not on one path";
            return out;
        }
    out.is_caterpillar = true;
    std::vector<int> pos_on_q(t.n(), -1);
    for (int i = 0; i < int(q.size()); ++i) pos_on_q[q[i]] = i;
    // Each end of the spine keeps its longer leg as the spine extension,
    // the shorter becomes that branch vertex's stem.
    auto end_legs = [&](int b, int toward) {
        std::vector<std::pair<int, int>> legs;
        for (int w : t.neighbors(b))
            if (w != toward) legs.push_back(walk_leg(t, b, w));
        std::sort(legs.begin(), legs.end(),
                  [](auto& x, auto& y) { return x.second > y.second; });
        return legs;  // two entries
    };
    auto legs1 = end_legs(b1, q[1]);
    auto legs2 = end_legs(b2, q[q.size() - 2]);
    if (legs1[0].second < sigma || legs2[0].second < sigma) {
        out.reason = "spine end leg shorter than sigma";
        return out;
    }
    // Branch vertices in spine order with their stems.
    std::vector<int> on_path_branches;
    for (int v : q)
        if (t.degree(v) == 3) on_path_branches.push_back(v);
    for (size_t i = 0; i + 1 < on_path_branches.size(); ++i) {
        int d = pos_on_q[on_path_branches[i + 1]] - pos_on_q[on_path_branches[i]];
        if (d < sigma) {
            out.reason = "branch gap below sigma";
            return out;
        }
    }
    out.sigma_wide = true;
    out.leaf_order.push_back(legs1[0].first);
    for (int b : on_path_branches) {
        int leaf;
        if (b == b1)
            leaf = legs1[1].first;
        else if (b == b2)
            leaf = legs2[1].first;
        else {
            int stem_nbr = -1;
            for (int w : t.neighbors(b))
                if (!on_q.get(w)) stem_nbr = w;
            leaf = walk_leg(t, b, stem_nbr).first;
        }
        out.leaf_order.push_back(leaf);
    }
    out.leaf_order.push_back(legs2[0].first);
    return out;
}

// ---- line graph preimage (Krausz partition, tree target) ----

struct Preimage {
    bool ok = false;
    std::string reason;
    Graph tree;
    std::vector<std::pair<int, int>> edge_of;  // h-vertex -> tree edge
};

Preimage line_preimage_tree(const Graph& h) {
    Preimage out;
    if (h.n() == 0) {
        out.reason = "empty";
        return out;
    }
    if (!is_connected(h)) {
        out.reason = "disconnected";
        return out;
    }
    if (h.n() == 1) {
        out.ok = true;
        out.tree = Graph(2, {{0, 1}});
        out.edge_of = {{0, 1}};
        return out;
    }
    auto cliques = maximal_cliques(h);
    std::vector<std::vector<int>> member(h.n());
    for (int c = 0; c < int(cliques.size()); ++c)
        for (int v : cliques[c]) member[v].push_back(c);
    for (int v = 0; v < h.n(); ++v)
        if (member[v].size() > 2) {
            out.reason = "vertex in three maximal cliques";
            return out;
        }
    for (size_t a = 0; a < cliques.size(); ++a)
        for (size_t b = a + 1; b < cliques.size(); ++b)
            if (set_and(cliques[a], cliques[b]).size() > 1) {
                out.reason = "two maximal cliques share an edge";
                return out;
            }
    int next = int(cliques.size());
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<std::pair<int, int>> edge_of(h.n());
    for (int v = 0; v < h.n(); ++v) {
        if (member[v].size() == 2) {
            edge_of[v] = {member[v][0], member[v][1]};
        } else {
            edge_of[v] = {member[v][0], next};
            ++next;
        }
        tree_edges.push_back(edge_of[v]);
    }
    Graph t(next, tree_edges);
    if (!is_tree(t)) {
        out.reason = "clique structure does not contract to a tree";
        return out;
    }
    // Correspondence check: adjacency in h iff tree edges share a node.
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v) {
            bool share = edge_of[u].first == edge_of[v].first ||
                         edge_of[u].first == edge_of[v].second ||
                         edge_of[u].second == edge_of[v].first ||
                         edge_of[u].second == edge_of[v].second;
            if (share != h.has_edge(u, v)) {
                out.reason = "line graph correspondence failed";
                return out;
            }
        }
    out.ok = true;
    out.tree = std::move(t);
    out.edge_of = std::move(edge_of);
    return out;
}

// ---- per-kind recognizers ----

struct HContext {
    InducedSubgraph sub;
    std::vector<int> hits;  // local ids, sorted
    std::vector<int> z;     // local simplicial set, sorted
};

HContext make_context(const Graph& g, const std::vector<int>& H, const std::vector<int>& S) {
    HContext ctx;
    ctx.sub = induced_subgraph(g, H);
    Bits sb(g.n());
    for (int v : S)
        if (v >= 0 && v < g.n()) sb.set(v);
    for (int i = 0; i < ctx.sub.graph.n(); ++i)
        if (sb.get(ctx.sub.to_host[i])) ctx.hits.push_back(i);
    ctx.z = simplicial_set(ctx.sub.graph);
    return ctx;
}

// A 2-hit path is classified as kind 2; kinds 0 and 1 decline it.
bool degenerate_two_hit_path(const HContext& ctx) {
    if (!is_path_graph(ctx.sub.graph)) return false;
    if (ctx.hits.size() != 2) return false;
    auto order = path_order(ctx.sub.graph);
    std::vector<int> ends{order.front(), order.back()};
    return sorted_unique(ends) == ctx.hits;
}

KindCheck check_kind0(const Graph& g, const HContext& ctx, int eta, int sigma) {
    KindCheck out;
    const Graph& h = ctx.sub.graph;
    if (!is_connected(h)) {
        out.reason = "not connected";
        return out;
    }
    if (int(ctx.hits.size()) != eta) {
        out.reason = "|H cap S| != eta";
        return out;
    }
    if (ctx.z != ctx.hits) {
        out.reason = "not loosely tied (Z(H) != H cap S)";
        return out;
    }
    if (degenerate_two_hit_path(ctx)) {
        out.reason = "two-hit path, classified as kind 2";
        return out;
    }
    auto pre = line_preimage_tree(h);
    if (!pre.ok) {
        out.reason = "not a line graph of a tree: " + pre.reason;
        return out;
    }
    std::vector<int> branch;
    for (int v = 0; v < pre.tree.n(); ++v)
        if (pre.tree.degree(v) > 2) branch.push_back(v);
    if (branch.size() > 1) {
        out.reason = "preimage tree has two branch vertices";
        return out;
    }
    // Stems measured from the root; a root choice must leave every nonzero
    // stem of length >= sigma.
    auto stem_ok = [&](int root) {
        Bits all(pre.tree.n());
        for (int i = 0; i < pre.tree.n(); ++i) all.set(i);
        auto dist = bfs_distances(pre.tree, root, all);
        for (int v = 0; v < pre.tree.n(); ++v)
            if (pre.tree.degree(v) <= 1 && v != root && dist[v] < sigma) return false;
        return true;
    };
    int root = -1;
    if (!branch.empty()) {
        if (stem_ok(branch[0])) root = branch[0];
    } else {
        for (int v = 0; v < pre.tree.n() && root == -1; ++v)
            if (stem_ok(v)) root = v;
    }
    if (root == -1) {
        out.reason = "no root with all stems of length >= sigma";
        return out;
    }
    out.ok = true;
    out.cert.kind = 0;
    out.cert.eta = eta;
    out.cert.sigma = sigma;
    out.cert.h = ctx.sub.to_host;
    for (int i : ctx.hits) out.cert.s_hits.push_back(ctx.sub.to_host[i]);
    out.cert.preimage.tree_n = pre.tree.n();
    out.cert.preimage.preimage_edge = pre.edge_of;
    return out;
}

KindCheck check_kind1(const Graph& g, const HContext& ctx, int eta, int sigma) {
    KindCheck out;
    const Graph& h = ctx.sub.graph;
    if (!is_tree(h)) {
        out.reason = "not a tree";
        return out;
    }
    std::vector<int> branch;
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) > 2) branch.push_back(v);
    if (branch.size() > 1) {
        out.reason = "more than one branch vertex";
        return out;
    }
    if (int(ctx.hits.size()) != eta) {
        out.reason = "|H cap S| != eta";
        return out;
    }
    std::vector<int> leaves;
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) <= 1) leaves.push_back(v);
    // Tied: Z(H) (= leaves of a tree) inside S.
    if (!set_minus(ctx.z, ctx.hits).empty()) {
        out.reason = "not tied (a simplicial vertex misses S)";
        return out;
    }
    if (degenerate_two_hit_path(ctx)) {
        out.reason = "two-hit path, classified as kind 2";
        return out;
    }
    auto interior_hits = set_minus(ctx.hits, leaves);
    auto stem_ok = [&](int root) {
        Bits all(h.n());
        for (int i = 0; i < h.n(); ++i) all.set(i);
        auto dist = bfs_distances(h, root, all);
        for (int v : leaves)
            if (v != root && dist[v] < sigma) return false;
        return true;
    };
    int root = -1;
    if (!branch.empty()) {
        root = branch[0];
        if (!set_minus(interior_hits, {root}).empty()) {
            out.reason = "a non-leaf S-hit differs from the root";
            return out;
        }
        if (!stem_ok(root)) {
            out.reason = "a stem is shorter than sigma";
            return out;
        }
    } else {
        if (interior_hits.size() > 1) {
            out.reason = "two non-leaf S-hits on a path";
            return out;
        }
        if (interior_hits.size() == 1) {
            root = interior_hits[0];
            if (!stem_ok(root)) {
                out.reason = "a stem is shorter than sigma";
                return out;
            }
        } else {
            for (int v = 0; v < h.n() && root == -1; ++v)
                if (stem_ok(v)) root = v;
            if (root == -1) {
                out.reason = "no root with all stems of length >= sigma";
                return out;
            }
        }
    }
    out.ok = true;
    out.cert.kind = 1;
    out.cert.eta = eta;
    out.cert.sigma = sigma;
    out.cert.h = ctx.sub.to_host;
    for (int i : ctx.hits) out.cert.s_hits.push_back(ctx.sub.to_host[i]);
    out.cert.root = ctx.sub.to_host[root];
    (void)g;
    return out;
}

KindCheck check_kind2(const Graph& g, const HContext& ctx, int eta, int sigma) {
    KindCheck out;
    const Graph& h = ctx.sub.graph;
    if (!is_path_graph(h)) {
        out.reason = "not a path";
        return out;
    }
    if (int(ctx.hits.size()) != eta) {
        out.reason = "|H cap S| != eta";
        return out;
    }
    auto order = path_order(h);
    std::vector<int> pos(h.n(), -1);
    for (int i = 0; i < int(order.size()); ++i) pos[order[i]] = i;
    std::vector<int> hit_pos;
    for (int v : ctx.hits) hit_pos.push_back(pos[v]);
    std::sort(hit_pos.begin(), hit_pos.end());
    if (hit_pos.front() != 0 || hit_pos.back() != int(order.size()) - 1) {
        out.reason = "ends of the path are not S-hits";
        return out;
    }
    for (size_t i = 0; i + 1 < hit_pos.size(); ++i)
        if (hit_pos[i + 1] - hit_pos[i] < sigma) {
            out.reason = "a widening gap is below sigma";
            return out;
        }
    out.ok = true;
    out.cert.kind = 2;
    out.cert.eta = eta;
    out.cert.sigma = sigma;
    out.cert.h = ctx.sub.to_host;
    for (int p : hit_pos) out.cert.s_hits.push_back(ctx.sub.to_host[order[p]]);
    (void)g;
    return out;
}

KindCheck check_kind3(const Graph& g, const HContext& ctx, int eta, int sigma) {
    KindCheck out;
    const Graph& h = ctx.sub.graph;
    if (int(ctx.hits.size()) != eta) {
        out.reason = "|H cap S| != eta";
        return out;
    }
    if (ctx.z != ctx.hits) {
        out.reason = "not loosely tied (Z(H) != H cap S)";
        return out;
    }
    auto cat = check_sigma_caterpillar(h, sigma);
    if (!cat.is_caterpillar) {
        out.reason = "not a caterpillar: " + cat.reason;
        return out;
    }
    if (!cat.sigma_wide) {
        out.reason = "no sigma-wide leaf enumeration: " + cat.reason;
        return out;
    }
    out.ok = true;
    out.cert.kind = 3;
    out.cert.eta = eta;
    out.cert.sigma = sigma;
    out.cert.h = ctx.sub.to_host;
    for (int v : cat.leaf_order) out.cert.s_hits.push_back(ctx.sub.to_host[v]);
    (void)g;
    return out;
}

KindCheck check_kind4(const Graph& g, const HContext& ctx, int eta, int sigma) {
    KindCheck out;
    const Graph& h = ctx.sub.graph;
    if (!is_connected(h)) {
        out.reason = "not connected";
        return out;
    }
    if (int(ctx.hits.size()) != eta) {
        out.reason = "|H cap S| != eta";
        return out;
    }
    if (ctx.z != ctx.hits) {
        out.reason = "not loosely tied (Z(H) != H cap S)";
        return out;
    }
    auto pre = line_preimage_tree(h);
    if (!pre.ok) {
        out.reason = "not a line graph of a tree: " + pre.reason;
        return out;
    }
    auto cat = check_sigma_caterpillar(pre.tree, sigma);
    if (!cat.is_caterpillar) {
        out.reason = "preimage is not a caterpillar: " + cat.reason;
        return out;
    }
    if (!cat.sigma_wide) {
        out.reason = "preimage has no sigma-wide enumeration: " + cat.reason;
        return out;
    }
    // Map the enumeration's tree leaves to their unique leaf edges.
    std::vector<int> leaf_edge(pre.tree.n(), -1);
    for (int v = 0; v < h.n(); ++v) {
        auto [a, b] = pre.edge_of[v];
        if (pre.tree.degree(a) == 1) leaf_edge[a] = v;
        if (pre.tree.degree(b) == 1) leaf_edge[b] = v;
    }
    out.cert.kind = 4;
    out.cert.eta = eta;
    out.cert.sigma = sigma;
    out.cert.h = ctx.sub.to_host;
    for (int l : cat.leaf_order) {
        if (leaf_edge[l] == -1) {
            out.reason = "enumeration leaf without a leaf edge";
            return out;
        }
        out.cert.s_hits.push_back(ctx.sub.to_host[leaf_edge[l]]);
    }
    out.cert.preimage.tree_n = pre.tree.n();
    out.cert.preimage.preimage_edge = pre.edge_of;
    out.ok = true;
    (void)g;
    return out;
}

}  // namespace

KindCheck check_connectifier_kind(const Graph& g, const std::vector<int>& H,
                                  const std::vector<int>& S, int eta, int sigma, int kind) {
    if (eta < 2 || sigma < 1)
        throw std::invalid_argument("check_connectifier_kind: need eta>=2, sigma>=1");
    auto ctx = make_context(g, H, S);
    switch (kind) {
        case 0: return check_kind0(g, ctx, eta, sigma);
        case 1: return check_kind1(g, ctx, eta, sigma);
        case 2: return check_kind2(g, ctx, eta, sigma);
        case 3: return check_kind3(g, ctx, eta, sigma);
        case 4: return check_kind4(g, ctx, eta, sigma);
        default: throw std::invalid_argument("check_connectifier_kind: kind must be 0..4");
    }
}

namespace {

// Is `order` (a permutation of the leaves of tree t) a sigma-wide
// enumeration, i.e. (l_1, v_{l_2}, .., v_{l_{k-1}}, l_k) a sigma-widening
// of some spine?
bool sigma_wide_specific(const Graph& t, const std::vector<int>& order, int sigma) {
    std::vector<int> leaves;
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) <= 1) leaves.push_back(v);
    if (sorted_unique(order) != leaves || order.size() != leaves.size()) return false;
    if (t.n() == 1) return order.size() == 1;
    if (!is_tree(t)) return false;
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) > 3) return false;
    std::vector<int> branch;
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) == 3) branch.push_back(v);
    if (branch.empty()) {
        if (order.size() != 2) return false;
        auto po = path_order(t);
        return int(po.size()) - 1 >= sigma;
    }
    auto branch_of_leaf = [&](int leaf) {
        int prev = -1, cur = leaf, len = 0;
        while (t.degree(cur) < 3) {
            int nxt = -1;
            for (int w : t.neighbors(cur))
                if (w != prev) nxt = w;
            prev = cur;
            cur = nxt;
            ++len;
        }
        return std::make_pair(cur, len);
    };
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> o = order;
        if (dir) std::reverse(o.begin(), o.end());
        auto [b1, leg1] = branch_of_leaf(o.front());
        auto [b2, leg2] = branch_of_leaf(o.back());
        auto q = tree_path(t, b1, b2);
        Bits on_q = to_bits(t.n(), q);
        bool ok = true;
        for (int b : branch)
            if (!on_q.get(b)) ok = false;
        if (!ok) continue;
        std::vector<int> pos_q(t.n(), -1);
        for (int i = 0; i < int(q.size()); ++i) pos_q[q[i]] = i;
        int prev_pos = 0;
        for (size_t i = 1; ok && i + 1 < o.size(); ++i) {
            auto [b, len] = branch_of_leaf(o[i]);
            if (!on_q.get(b)) {
                ok = false;
                break;
            }
            int p = leg1 + pos_q[b];
            if (p - prev_pos < sigma) ok = false;
            prev_pos = p;
        }
        if (!ok) continue;
        int p_end = leg1 + int(q.size()) - 1 + leg2;
        if (p_end - prev_pos < sigma) continue;
        return true;
    }
    return false;
}

}  // namespace

bool check_enumeration_sigma_wide(const Graph& g, const std::vector<int>& H, int kind,
                                  int sigma, const std::vector<int>& order) {
    auto sub = induced_subgraph(g, H);
    std::vector<int> local;
    for (int v : order) {
        if (v < 0 || v >= g.n() || sub.from_host[v] == -1) return false;
        local.push_back(sub.from_host[v]);
    }
    if (kind == 3) return sigma_wide_specific(sub.graph, local, sigma);
    if (kind != 4) return false;
    auto pre = line_preimage_tree(sub.graph);
    if (!pre.ok) return false;
    std::vector<int> t_order;
    for (int v : local) {
        auto [a, b] = pre.edge_of[v];
        int leaf = -1;
        if (pre.tree.degree(a) == 1) leaf = a;
        if (pre.tree.degree(b) == 1) leaf = b;
        if (leaf == -1) return false;
        t_order.push_back(leaf);
    }
    return sigma_wide_specific(pre.tree, t_order, sigma);
}

RecognizeResult recognize_connectifier(const Graph& g, const std::vector<int>& H,
                                       const std::vector<int>& S, int eta, int sigma) {
    if (eta < 2 || sigma < 1)
        throw std::invalid_argument("recognize_connectifier: need eta>=2, sigma>=1");
    RecognizeResult out;
    auto ctx = make_context(g, H, S);
    KindCheck checks[5] = {check_kind0(g, ctx, eta, sigma), check_kind1(g, ctx, eta, sigma),
                           check_kind2(g, ctx, eta, sigma), check_kind3(g, ctx, eta, sigma),
                           check_kind4(g, ctx, eta, sigma)};
    for (int k = 0; k < 5; ++k) {
        if (checks[k].ok) {
            out.accepted = true;
            out.cert = checks[k].cert;
            return out;
        }
        out.reasons[k] = checks[k].reason;
    }
    return out;
}

// ---- bloated trees ----

BloatedCheck verify_bloated_tree(const Graph& g, const std::vector<int>& J) {
    auto sub = induced_subgraph(g, J);
    if (!is_connected(sub.graph))
        throw std::invalid_argument("verify_bloated_tree: g[J] must be connected");
    BloatedCheck out;
    auto cliques = maximal_cliques(sub.graph);
    std::vector<std::vector<int>> big;
    for (auto& c : cliques)
        if (c.size() >= 3) big.push_back(c);
    // (1) every edge in at most one big clique.
    for (size_t a = 0; a < big.size(); ++a)
        for (size_t b = a + 1; b < big.size(); ++b) {
            auto shared = set_and(big[a], big[b]);
            if (shared.size() >= 2) {
                out.violation = "an edge lies in two big cliques";
                for (int v : shared) out.violating.push_back(sub.to_host[v]);
                return out;
            }
        }
    // (2) each big-clique vertex has at most one outside neighbor.
    for (auto& k : big) {
        Bits kb = to_bits(sub.graph.n(), k);
        for (int v : k) {
            std::vector<int> outside;
            for (int w : sub.graph.neighbors(v))
                if (!kb.get(w)) outside.push_back(w);
            if (outside.size() > 1) {
                out.violation = "a big-clique vertex has two outside neighbors";
                out.violating.push_back(sub.to_host[v]);
                for (int w : outside) out.violating.push_back(sub.to_host[w]);
                return out;
            }
        }
    }
    // (3) contracting big cliques yields a tree. (1)+(2) force disjointness.
    auto contracted = contract_sets(sub.graph, big);
    if (!is_tree(contracted.graph)) {
        out.violation = "contracting big cliques does not yield a tree";
        // Implicate a short non-clique cycle if one is found below.
    }
    // Redundant cross-check: short cycles must span cliques.
    const int len_cap = 8, count_cap = 64;
    int found = 0;
    std::vector<int> bad_cycle;
    std::vector<int> path;
    Bits on_path(sub.graph.n());
    std::function<bool(int)> dfs = [&](int root) -> bool {
        int w = path.back();
        for (int x : sub.graph.neighbors(w)) {
            if (x <= root || on_path.get(x)) continue;
            if (int(path.size()) >= 3 && sub.graph.has_edge(x, root) &&
                path[1] < x) {  // canonical direction
                path.push_back(x);
                if (++found <= count_cap && !is_clique(sub.graph, path)) {
                    bad_cycle = path;
                    return true;
                }
                path.pop_back();
            }
            if (int(path.size()) < len_cap) {
                path.push_back(x);
                on_path.set(x);
                if (dfs(root)) return true;
                on_path.reset(x);
                path.pop_back();
            }
        }
        return false;
    };
    for (int u = 0; u < sub.graph.n() && bad_cycle.empty(); ++u) {
        path.assign(1, u);
        on_path.clear();
        on_path.set(u);
        dfs(u);
    }
    if (!bad_cycle.empty()) {
        if (out.violation.empty()) out.violation = "a cycle spans non-adjacent vertices";
        for (int v : bad_cycle) out.violating.push_back(sub.to_host[v]);
        return out;
    }
    if (!out.violation.empty()) return out;
    out.ok = true;
    out.cert.j = sub.to_host;
    for (auto& k : big) {
        std::vector<int> host_k;
        for (int v : k) host_k.push_back(sub.to_host[v]);
        out.cert.big_cliques.push_back(std::move(host_k));
    }
    return out;
}

namespace {

bool connected_without(const Graph& g, const Bits& members, int drop, int count) {
    // members minus drop still connected (count = |members|).
    if (count <= 1) return false;
    Bits allowed = members;
    allowed.reset(drop);
    int start = -1;
    for (int v = 0; v < g.n() && start == -1; ++v)
        if (allowed.get(v)) start = v;
    return int(component_of(g, start, allowed).size()) == count - 1;
}

// Greedy single-vertex minimality: drop any removable vertex outside keep.
std::vector<int> prune_connected(const Graph& g, std::vector<int> verts, const Bits& keep) {
    Bits members = to_bits(g.n(), verts);
    int count = int(verts.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : verts) {
            if (!members.get(v) || keep.get(v)) continue;
            if (connected_without(g, members, v, count)) {
                members.reset(v);
                --count;
                changed = true;
            }
        }
    }
    return members.to_vector();
}

// Steiner-ish connected superset of X: union of shortest paths to X[0].
std::vector<int> shortest_path_union(const Graph& g, const std::vector<int>& x) {
    Bits all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    std::vector<int> par(g.n(), -1);
    std::deque<int> q{x[0]};
    std::vector<char> seen(g.n(), 0);
    seen[x[0]] = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (int w : g.neighbors(a))
            if (!seen[w]) {
                seen[w] = 1;
                par[w] = a;
                q.push_back(w);
            }
    }
    std::vector<int> out;
    for (int t : x)
        for (int v = t; v != -1; v = par[v]) out.push_back(v);
    return sorted_unique(std::move(out));
}

// Pendant growth: shortest path from s_new through J-free vertices ending
// at a vertex with exactly one neighbor in J.
std::optional<std::vector<int>> pendant_path(const Graph& g, const Bits& j, int s_new) {
    if (j.get(s_new)) return std::nullopt;
    auto j_nbrs = [&](int v) {
        int c = 0;
        for (int w : g.neighbors(v)) c += j.get(w);
        return c;
    };
    std::vector<int> par(g.n(), -2);
    std::deque<int> q;
    int jn0 = j_nbrs(s_new);
    if (jn0 == 1) return std::vector<int>{s_new};
    if (jn0 > 1) return std::nullopt;
    par[s_new] = -1;
    q.push_back(s_new);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v)) {
            if (j.get(w) || par[w] != -2) continue;
            int jn = j_nbrs(w);
            par[w] = v;
            if (jn == 1) {
                std::vector<int> path;
                for (int x = w; x != -1; x = par[x]) path.push_back(x);
                std::reverse(path.begin(), path.end());
                return path;  // s_new .. terminal
            }
            if (jn == 0) q.push_back(w);
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> try_repair(const Graph& g, std::vector<int> j,
                                           const Bits& keep, int rounds) {
    for (int r = 0; r < rounds; ++r) {
        auto chk = verify_bloated_tree(g, j);
        if (chk.ok) return j;
        Bits members = to_bits(g.n(), j);
        int count = int(j.size());
        bool fixed = false;
        for (int v : sorted_unique(chk.violating)) {
            if (keep.get(v)) continue;
            if (connected_without(g, members, v, count)) {
                members.reset(v);
                j = members.to_vector();
                fixed = true;
                break;
            }
        }
        if (!fixed) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

BloatedSearch find_bloated_tree(const Graph& g, const std::vector<int>& S, int k,
                                Budget& budget, Rng& rng) {
    BloatedSearch out;
    auto s = sorted_unique(S);
    if (s.empty()) return out;
    // S must sit inside one component.
    Bits all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    auto comp = component_of(g, s[0], all);
    for (int v : s)
        if (!contains(comp, v))
            throw std::invalid_argument("find_bloated_tree: S split across components");
    Bits sbits = to_bits(g.n(), s);

    auto consider = [&](const std::vector<int>& j) {
        int hits = 0;
        for (int v : j) hits += sbits.get(v);
        if (hits > out.hits) {
            auto chk = verify_bloated_tree(g, j);
            if (chk.ok) {
                out.hits = hits;
                out.cert = chk.cert;
                if (hits >= k) out.status = SearchStatus::Found;
            }
        }
        return out.status == SearchStatus::Found;
    };

    auto grow_and_prune = [&](std::vector<int> j) -> std::vector<int> {
        Bits jb = to_bits(g.n(), j);
        // Attach pendant first-contact paths toward unused S vertices,
        // nearest candidates first.
        while (true) {
            if (!budget.tick(4)) break;
            int hits = 0;
            for (int v : j) hits += sbits.get(v);
            if (hits >= k) break;
            bool grown = false;
            for (int cand : s) {
                if (jb.get(cand)) continue;
                auto p = pendant_path(g, jb, cand);
                if (!p) continue;
                // The contact vertex may not break a big-clique budget:
                // accept, verify cheaply, revert on failure.
                std::vector<int> j2 = j;
                j2.insert(j2.end(), p->begin(), p->end());
                j2 = sorted_unique(std::move(j2));
                auto chk = verify_bloated_tree(g, j2);
                if (chk.ok) {
                    j = std::move(j2);
                    jb = to_bits(g.n(), j);
                    grown = true;
                    break;
                }
            }
            if (!grown) break;
        }
        return prune_connected(g, j, sbits);
    };

    const int attempts = 24;
    for (int attempt = 0; attempt < attempts && out.status != SearchStatus::Found; ++attempt) {
        if (!budget.tick(8)) break;
        std::vector<int> x;
        int want = std::min<int>(std::max(k, 2), int(s.size()));
        if (attempt == 0) {
            x = std::vector<int>(s.begin(), s.begin() + want);
        } else {
            x = rng.sample(s, want);
            std::sort(x.begin(), x.end());
        }
        auto seed = shortest_path_union(g, x);
        Bits keep = to_bits(g.n(), x);
        auto j = prune_connected(g, seed, keep);
        auto repaired = try_repair(g, j, keep, 24);
        if (!repaired) {
            // Fall back to a smaller anchor set.
            if (x.size() > 2) {
                std::vector<int> x2(x.begin(), x.begin() + 2);
                auto seed2 = shortest_path_union(g, x2);
                repaired = try_repair(g, prune_connected(g, seed2, to_bits(g.n(), x2)),
                                      to_bits(g.n(), x2), 24);
            }
            if (!repaired) continue;
        }
        auto grown = grow_and_prune(*repaired);
        consider(grown);
    }
    if (out.status != SearchStatus::Found && g.n() <= 16 && !budget.exhausted()) {
        // Exhaustive sweep over connected induced subgraphs.
        int best_hits = out.hits;
        for (uint32_t mask = 1; mask < (uint32_t(1) << g.n()); ++mask) {
            if (!budget.tick()) break;
            int hits = 0;
            for (int v = 0; v < g.n(); ++v)
                if ((mask >> v) & 1) hits += sbits.get(v);
            if (hits <= best_hits) continue;
            std::vector<int> j;
            for (int v = 0; v < g.n(); ++v)
                if ((mask >> v) & 1) j.push_back(v);
            auto subg = induced_subgraph(g, j);
            if (!is_connected(subg.graph)) continue;
            auto chk = verify_bloated_tree(g, j);
            if (chk.ok) {
                best_hits = hits;
                out.hits = hits;
                out.cert = chk.cert;
                if (hits >= k) {
                    out.status = SearchStatus::Found;
                    break;
                }
            }
        }
        if (out.status != SearchStatus::Found && !budget.exhausted()) {
            out.status = SearchStatus::None;  // exhaustively: no k-hit bloated tree
            return out;
        }
    }
    if (out.status != SearchStatus::Found) out.status = SearchStatus::Unknown;
    return out;
}

namespace {

// Bump suppression over a local graph with edge-to-path expansion maps.
struct Suppressed {
    Graph j1;                   // graph on surviving vertices (j1 ids)
    std::vector<int> to_local;  // j1 id -> input id
    // Key: j1 edge (a<b); value: input-id path from to_local[a] to to_local[b].
    std::map<std::pair<int, int>, std::vector<int>> expansion;
};

Suppressed suppress_with_paths(const Graph& g, const Bits& s_marks) {
    std::vector<std::vector<int>> adj(g.n());
    for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
    std::map<std::pair<int, int>, std::vector<int>> paths;
    for (auto [u, v] : g.edges()) paths[{u, v}] = {u, v};
    std::vector<char> alive(g.n(), 1);
    auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    auto oriented = [&](int from, int to) {
        auto p = paths[key(from, to)];
        if (p.front() != from) std::reverse(p.begin(), p.end());
        return p;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n(); ++v) {
            if (!alive[v] || s_marks.get(v) || adj[v].size() != 2) continue;
            int a = adj[v][0], b = adj[v][1];
            if (contains(adj[a], b)) continue;
            auto left = oriented(a, v);
            auto right = oriented(v, b);
            left.insert(left.end(), right.begin() + 1, right.end());
            paths.erase(key(a, v));
            paths.erase(key(v, b));
            if (left.front() != std::min(a, b)) std::reverse(left.begin(), left.end());
            paths[key(a, b)] = std::move(left);
            alive[v] = 0;
            adj[v].clear();
            for (auto* lst : {&adj[a], &adj[b]}) {
                auto it = std::lower_bound(lst->begin(), lst->end(), v);
                if (it != lst->end() && *it == v) lst->erase(it);
            }
            adj[a].insert(std::lower_bound(adj[a].begin(), adj[a].end(), b), b);
            adj[b].insert(std::lower_bound(adj[b].begin(), adj[b].end(), a), a);
            changed = true;
        }
    }
    Suppressed out;
    std::vector<int> from_local(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (alive[v]) {
            from_local[v] = int(out.to_local.size());
            out.to_local.push_back(v);
        }
    std::vector<std::pair<int, int>> es;
    for (auto& [k, p] : paths) {
        int a = from_local[k.first], b = from_local[k.second];
        es.emplace_back(a, b);
        out.expansion[{std::min(a, b), std::max(a, b)}] = p;
    }
    out.j1 = Graph(int(out.to_local.size()), es);
    return out;
}

// One dispatch pass over a suppressed bloated tree. Returns candidate
// vertex sets (j1-local). Pruning requests surface as `prune` (j1-local
// component whose S-free removal keeps everything valid).
struct DispatchOut {
    std::vector<std::vector<int>> candidates;
    std::vector<int> prune;
};

// End-leg of a caterpillar triple: spine detour to the attachment, then the
// hanging first-contact path.
struct TripleInfo {
    int q = -1;                // position of a_i on the path
    std::vector<int> attach;   // positions within {q,q+1,q+2} adjacent to x
    bool heavy = false;
    int x = -1;                // first hanging vertex
    std::vector<int> w;        // x .. y (y in S)
};

DispatchOut dispatch_pass(const Graph& j1, const std::vector<int>& s1, int eta, int sigma,
                          Budget& budget) {
    DispatchOut out;
    Bits sbits = to_bits(j1.n(), s1);
    Bits all(j1.n());
    for (int v = 0; v < j1.n(); ++v) all.set(v);

    auto shortest_to_s = [&](int from, const Bits& allowed) -> std::optional<std::vector<int>> {
        // BFS from `from` to the nearest S vertex; interior avoids S.
        if (sbits.get(from)) return std::vector<int>{from};
        std::vector<int> par(j1.n(), -2);
        std::deque<int> q{from};
        par[from] = -1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : j1.neighbors(v)) {
                if (!allowed.get(w) || par[w] != -2) continue;
                par[w] = v;
                if (sbits.get(w)) {
                    std::vector<int> path;
                    for (int x = w; x != -1; x = par[x]) path.push_back(x);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                q.push_back(w);
            }
        }
        return std::nullopt;
    };

    // ---- stage A: big clique ----
    auto cliques = maximal_cliques(j1);
    std::vector<std::vector<int>> big;
    for (auto& c : cliques)
        if (int(c.size()) >= std::max(3, eta)) big.push_back(c);
    std::sort(big.begin(), big.end(), [](auto& a, auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    for (auto& k : big) {
        if (!budget.tick(4)) return out;
        std::vector<std::vector<int>> stems;
        bool pruned = false;
        for (int v : k) {
            Bits allowed = all;
            for (int u : k)
                if (u != v) allowed.reset(u);
            auto comp = component_of(j1, v, allowed);
            Bits cb = to_bits(j1.n(), comp);
            bool has_s = false;
            for (int u : comp)
                if (sbits.get(u)) has_s = true;
            if (!has_s) {
                out.prune = comp;
                pruned = true;
                break;
            }
            auto p = shortest_to_s(v, cb);
            if (p && int(p->size()) - 1 + 1 >= sigma) stems.push_back(*p);
        }
        if (pruned) return out;
        if (int(stems.size()) >= eta) {
            std::vector<int> h1;
            for (int i = 0; i < eta; ++i)
                h1.insert(h1.end(), stems[i].begin(), stems[i].end());
            out.candidates.push_back(sorted_unique(std::move(h1)));
        }
    }

    // ---- stage B: high-degree vertex with stable neighborhood ----
    for (int x = 0; x < j1.n(); ++x) {
        int need = sbits.get(x) ? eta - 1 : eta;
        if (j1.degree(x) < need || need < 1) continue;
        if (!is_stable_set(j1, j1.neighbors(x))) continue;
        if (!budget.tick(4)) return out;
        Bits allowed = all;
        allowed.reset(x);
        std::vector<std::vector<int>> stems;
        bool pruned = false;
        for (int a : j1.neighbors(x)) {
            auto comp = component_of(j1, a, allowed);
            bool has_s = false;
            for (int u : comp)
                if (sbits.get(u)) has_s = true;
            if (!has_s) {
                out.prune = comp;
                pruned = true;
                break;
            }
            auto p = shortest_to_s(a, to_bits(j1.n(), comp));
            if (p && int(p->size()) - 1 + 1 >= sigma) stems.push_back(*p);
        }
        if (pruned) return out;
        if (int(stems.size()) >= need) {
            std::vector<int> h1{x};
            for (int i = 0; i < need; ++i)
                h1.insert(h1.end(), stems[i].begin(), stems[i].end());
            out.candidates.push_back(sorted_unique(std::move(h1)));
        }
    }

    // ---- stage C: long paths; widened subpaths and caterpillars ----
    std::vector<std::vector<int>> base_paths;
    {
        // Double-BFS diameter-ish path.
        auto d0 = bfs_distances(j1, 0, all);
        int far = 0;
        for (int v = 0; v < j1.n(); ++v)
            if (d0[v] > d0[far]) far = v;
        auto d1 = bfs_distances(j1, far, all);
        int far2 = far;
        for (int v = 0; v < j1.n(); ++v)
            if (d1[v] > d1[far2]) far2 = v;
        base_paths.push_back(tree_path(j1, far, far2));
        // Paths between far S pairs.
        if (!s1.empty()) {
            auto ds = bfs_distances(j1, s1[0], all);
            int fs = s1[0];
            for (int v : s1)
                if (ds[v] > ds[fs]) fs = v;
            auto ds2 = bfs_distances(j1, fs, all);
            int fs2 = fs;
            for (int v : s1)
                if (ds2[v] > ds2[fs2]) fs2 = v;
            if (fs != fs2) base_paths.push_back(tree_path(j1, fs, fs2));
        }
    }
    for (auto& p : base_paths) {
        PathSeq seq{p};
        if (!is_induced_path(j1, seq)) continue;
        if (!budget.tick(4)) return out;
        std::vector<int> pos_hits;
        for (int i = 0; i < int(p.size()); ++i)
            if (sbits.get(p[i])) pos_hits.push_back(i);
        // type 2: eta consecutive hits with gaps >= sigma.
        for (int i = 0; i + eta <= int(pos_hits.size()); ++i) {
            bool ok = true;
            for (int t = 0; t + 1 < eta; ++t)
                if (pos_hits[i + t + 1] - pos_hits[i + t] < sigma) ok = false;
            if (ok) {
                std::vector<int> h1(p.begin() + pos_hits[i], p.begin() + pos_hits[i + eta - 1] + 1);
                out.candidates.push_back(sorted_unique(std::move(h1)));
                break;
            }
        }
        // Caterpillar construction inside maximal S-free stretches.
        std::vector<std::pair<int, int>> stretches;  // [lo, hi] positions, S-free
        {
            int lo = 0;
            for (int i = 0; i <= int(p.size()); ++i) {
                if (i == int(p.size()) || sbits.get(p[i])) {
                    if (i - lo >= 5) stretches.emplace_back(lo, i - 1);
                    lo = i + 1;
                }
            }
        }
        for (auto [lo, hi] : stretches) {
            if (!budget.tick(4)) return out;
            std::vector<TripleInfo> triples;
            Bits on_p = to_bits(j1.n(), p);
            for (int q = std::max(lo, 1); q + 2 <= std::min(hi, int(p.size()) - 2); ++q) {
                std::vector<int> a_set{p[q], p[q + 1], p[q + 2]};
                Bits allowed = all;
                for (int v : a_set) allowed.reset(v);
                // Components: skip the two containing the rest of the path.
                Bits seen(j1.n());
                TripleInfo info;
                info.q = q;
                for (int v = 0; v < j1.n() && info.x == -1; ++v) {
                    if (!allowed.get(v) || seen.get(v)) continue;
                    auto comp = component_of(j1, v, allowed);
                    for (int u : comp) seen.set(u);
                    bool touches_path = false;
                    for (int u : comp)
                        if (on_p.get(u)) touches_path = true;
                    if (touches_path) continue;
                    // A hanging component; must reach S.
                    bool has_s = false;
                    for (int u : comp)
                        if (sbits.get(u)) has_s = true;
                    if (!has_s) {
                        out.prune = comp;
                        return out;
                    }
                    // First-contact path from the attachment into S.
                    Bits cb = to_bits(j1.n(), comp);
                    std::vector<int> contacts;
                    for (int u : comp)
                        for (int t : a_set)
                            if (j1.has_edge(u, t)) contacts.push_back(u);
                    contacts = sorted_unique(std::move(contacts));
                    for (int c : contacts) {
                        auto w = shortest_to_s(c, cb);
                        if (!w) continue;
                        bool interior_contact = false;
                        for (size_t t = 1; t < w->size(); ++t)
                            if (contains(contacts, (*w)[t])) interior_contact = true;
                        if (interior_contact) continue;
                        info.x = c;
                        info.w = *w;
                        break;
                    }
                    if (info.x != -1) {
                        for (int t = 0; t < 3; ++t)
                            if (j1.has_edge(info.x, p[q + t])) info.attach.push_back(q + t);
                        if (info.attach.size() == 1)
                            info.heavy = false;
                        else if (info.attach.size() == 2 &&
                                 info.attach[1] - info.attach[0] == 1)
                            info.heavy = true;
                        else
                            info.x = -1;  // {a,c} or all three: not usable
                    }
                }
                if (info.x != -1) triples.push_back(info);
            }
            if (int(triples.size()) < eta) continue;
            // Selection: ends are free-form, middles share a kind, spacing
            // at least 4 in q and sigma between attachments.
            for (int kind_heavy = 0; kind_heavy < 2 && out.candidates.size() < 8; ++kind_heavy) {
                std::vector<int> mids;
                for (int i = 0; i < int(triples.size()); ++i)
                    if (triples[i].heavy == bool(kind_heavy)) mids.push_back(i);
                if (int(mids.size()) < std::max(0, eta - 2)) continue;
                for (size_t first = 0; first < triples.size(); ++first) {
                    std::vector<int> chosen{int(first)};
                    int last_q = triples[first].q;
                    int last_attach = triples[first].attach.back();
                    for (int m : mids) {
                        if (int(chosen.size()) >= eta - 1) break;
                        if (triples[m].q < last_q + 4) continue;
                        if (triples[m].attach.front() - last_attach < sigma) continue;
                        chosen.push_back(m);
                        last_q = triples[m].q;
                        last_attach = triples[m].attach.back();
                    }
                    if (int(chosen.size()) < eta - 1) continue;
                    int tail = -1;
                    for (int i = chosen.back() + 1; i < int(triples.size()); ++i)
                        if (triples[i].q >= last_q + 4) {
                            tail = i;
                            break;
                        }
                    if (tail == -1) continue;
                    chosen.push_back(tail);
                    // Assemble.
                    std::vector<int> h1;
                    const auto& t1 = triples[chosen.front()];
                    const auto& tn = triples[chosen.back()];
                    int spine_lo = t1.q + 2, spine_hi = tn.q;
                    for (int i = spine_lo; i <= spine_hi; ++i) h1.push_back(p[i]);
                    // Left leg: from c down to the nearest attachment.
                    for (int i = t1.attach.back(); i < t1.q + 2; ++i) h1.push_back(p[i]);
                    h1.insert(h1.end(), t1.w.begin(), t1.w.end());
                    // Right leg: from a up to the nearest attachment.
                    for (int i = tn.q + 1; i <= tn.attach.front(); ++i) h1.push_back(p[i]);
                    h1.insert(h1.end(), tn.w.begin(), tn.w.end());
                    for (size_t c = 1; c + 1 < chosen.size(); ++c) {
                        const auto& tm = triples[chosen[c]];
                        h1.insert(h1.end(), tm.w.begin(), tm.w.end());
                    }
                    out.candidates.push_back(sorted_unique(std::move(h1)));
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace

ExtractionResult extract_connectifier(const Graph& g, const std::vector<int>& S, int eta,
                                      int sigma, Budget& budget, Rng& rng) {
    if (eta < 2 || sigma < 1)
        throw std::invalid_argument("extract_connectifier: need eta>=2, sigma>=1");
    ExtractionResult res;
    auto s = sorted_unique(S);
    if (int(s.size()) < eta) {
        res.trace.push_back("|S| below eta; need at least " + std::to_string(eta));
        return res;
    }
    Bits all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    auto comp = component_of(g, s[0], all);
    for (int v : s)
        if (!contains(comp, v))
            throw std::invalid_argument("extract_connectifier: S split across components");

    auto finish = [&](const std::vector<int>& h) {
        auto rec = recognize_connectifier(g, h, s, eta, sigma);
        if (rec.accepted) {
            res.ok = true;
            res.cert = rec.cert;
            res.trace.push_back("accepted as kind " + std::to_string(rec.cert.kind));
            return true;
        }
        return false;
    };

    // Base case for eta = 2: a shortest path between an S pair, trimmed at
    // interior hits, is a type-2 witness.
    if (eta == 2) {
        Bits sbits = to_bits(g.n(), s);
        for (int x : s) {
            auto dist = bfs_distances(g, x, all);
            for (int y : s) {
                if (y <= x || dist[y] < sigma) continue;
                auto sp = shortest_path_union(g, {x, y});
                auto sub = induced_subgraph(g, sp);
                if (!is_path_graph(sub.graph)) continue;
                auto order = path_order(sub.graph);
                std::vector<int> hostp;
                for (int v : order) hostp.push_back(sub.to_host[v]);
                if (hostp.front() != x) std::reverse(hostp.begin(), hostp.end());
                int seg_start = 0;
                for (int i = 1; i < int(hostp.size()); ++i) {
                    if (!sbits.get(hostp[i])) continue;
                    if (i - seg_start >= sigma) {
                        std::vector<int> h(hostp.begin() + seg_start, hostp.begin() + i + 1);
                        if (finish(h)) return res;
                    }
                    seg_start = i;
                }
            }
        }
    }

    int want_hits = (sigma == 1) ? eta : std::min<int>(int(s.size()), std::max(eta * sigma, eta + 1));
    const int attempts = 12;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        if (budget.exhausted()) {
            res.trace.push_back("budget exhausted");
            break;
        }
        int target = std::max(eta, want_hits - (attempt % 3));
        auto bs = find_bloated_tree(g, s, target, budget, rng);
        if (bs.cert.j.empty() || bs.hits < eta) {
            res.trace.push_back("attempt " + std::to_string(attempt) +
                                ": no bloated tree with enough S hits (best " +
                                std::to_string(bs.hits) + ")");
            if (bs.status == SearchStatus::None && target <= eta) break;
            continue;
        }
        // Dispatch with lazy minimality pruning.
        std::vector<int> j = bs.cert.j;
        Bits sbits = to_bits(g.n(), s);
        for (int round = 0; round < int(bs.cert.j.size()) + 2; ++round) {
            j = prune_connected(g, j, sbits);
            auto sub = induced_subgraph(g, j);
            Bits s_local(sub.graph.n());
            for (int i = 0; i < sub.graph.n(); ++i)
                if (sbits.get(sub.to_host[i])) s_local.set(i);
            auto sup = suppress_with_paths(sub.graph, s_local);
            std::vector<int> s_j1;
            for (int i = 0; i < sup.j1.n(); ++i)
                if (s_local.get(sup.to_local[i])) s_j1.push_back(i);
            auto pass = dispatch_pass(sup.j1, s_j1, eta, sigma, budget);
            if (!pass.prune.empty()) {
                // Translate the pruned component back to host ids: its
                // vertices plus interiors of its incident expansion paths.
                Bits doomed(sup.j1.n());
                for (int v : pass.prune) doomed.set(v);
                std::set<int> drop;
                for (int v : pass.prune) drop.insert(sub.to_host[sup.to_local[v]]);
                for (auto& [key, path] : sup.expansion) {
                    if (doomed.get(key.first) || doomed.get(key.second))
                        for (size_t i = 1; i + 1 < path.size(); ++i)
                            drop.insert(sub.to_host[path[i]]);
                }
                std::vector<int> j2;
                for (int v : j)
                    if (!drop.count(v)) j2.push_back(v);
                j = std::move(j2);
                continue;
            }
            bool done = false;
            for (auto& cand : pass.candidates) {
                // Expand suppressed bumps back into host vertices.
                Bits cb(sup.j1.n());
                for (int v : cand) cb.set(v);
                std::vector<int> host;
                for (int v : cand) host.push_back(sub.to_host[sup.to_local[v]]);
                for (auto& [key, path] : sup.expansion) {
                    if (cb.get(key.first) && cb.get(key.second))
                        for (size_t i = 1; i + 1 < path.size(); ++i)
                            host.push_back(sub.to_host[path[i]]);
                }
                if (finish(sorted_unique(std::move(host)))) return res;
                done = true;
            }
            if (done || pass.candidates.empty()) {
                if (pass.candidates.empty())
                    res.trace.push_back("attempt " + std::to_string(attempt) +
                                        ": dispatch produced no candidate");
                else
                    res.trace.push_back("attempt " + std::to_string(attempt) +
                                        ": candidates rejected by recognizer");
                break;
            }
        }
    }
    if (res.trace.empty()) res.trace.push_back("no extraction route succeeded");
    return res;
}

TripleWitness minimal_connected_triple(const Graph& g, const std::vector<int>& X, Rng* rng) {
    auto x = sorted_unique(X);
    if (x.size() != 3) throw std::invalid_argument("minimal_connected_triple: need |X| = 3");
    Bits all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    auto comp = component_of(g, x[0], all);
    for (int v : x)
        if (!contains(comp, v))
            throw std::invalid_argument("minimal_connected_triple: X split across components");
    Bits keep = to_bits(g.n(), x);

    auto classify = [&](const std::vector<int>& h) -> TripleWitness {
        TripleWitness w;
        w.h = h;
        auto sub = induced_subgraph(g, h);
        std::vector<int> xl;
        for (int v : x) xl.push_back(sub.from_host[v]);
        // Triangle?
        std::vector<int> tri;
        for (auto [u, v] : sub.graph.edges()) {
            for (int t : sub.graph.neighbors(u))
                if (t > v && sub.graph.has_edge(v, t)) {
                    tri = {u, v, t};
                    break;
                }
            if (!tri.empty()) break;
        }
        if (tri.empty()) {
            if (!is_tree(sub.graph)) return w;  // shape 0: unclassified
            // Median of the three pairwise paths.
            auto p01 = tree_path(sub.graph, xl[0], xl[1]);
            auto p02 = tree_path(sub.graph, xl[0], xl[2]);
            auto p12 = tree_path(sub.graph, xl[1], xl[2]);
            auto common = set_and(set_and(sorted_unique(p01), sorted_unique(p02)),
                                  sorted_unique(p12));
            if (common.size() != 1) return w;
            int a = common[0];
            w.shape = 1;
            w.center = sub.to_host[a];
            for (int t : xl) {
                auto p = tree_path(sub.graph, a, t);
                std::vector<int> hostp;
                for (int v : p) hostp.push_back(sub.to_host[v]);
                w.paths.push_back(hostp);
            }
            return w;
        }
        // Triangle shape: drop the three triangle edges, match components.
        std::vector<std::pair<int, int>> es;
        auto in_tri = [&](int a, int b) {
            int c = 0;
            for (int t : tri) c += (t == a || t == b);
            return c == 2;
        };
        for (auto [u, v] : sub.graph.edges())
            if (!in_tri(u, v)) es.emplace_back(u, v);
        Graph cut(sub.graph.n(), es);
        w.shape = 2;
        for (int t : xl) {
            Bits callow(cut.n());
            for (int i = 0; i < cut.n(); ++i) callow.set(i);
            auto cc = component_of(cut, t, callow);
            int anchor = -1;
            for (int tv : tri)
                if (contains(cc, tv)) anchor = tv;
            if (anchor == -1) {
                w.shape = 0;
                return w;
            }
            auto p = tree_path(cut, anchor, t);
            std::vector<int> hostp;
            for (int v : p) hostp.push_back(sub.to_host[v]);
            w.paths.push_back(hostp);
            w.triangle.push_back(sub.to_host[anchor]);
        }
        return w;
    };

    Rng fallback(0);
    Rng& r = rng ? *rng : fallback;
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<int> h = comp;
        if (attempt > 0) r.shuffle(h);
        // Greedy single-vertex minimality over the chosen order.
        Bits members = to_bits(g.n(), comp);
        int count = int(comp.size());
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v : h) {
                if (!members.get(v) || keep.get(v)) continue;
                if (connected_without(g, members, v, count)) {
                    members.reset(v);
                    --count;
                    changed = true;
                }
            }
        }
        auto w = classify(members.to_vector());
        if (w.shape != 0) return w;
    }
    TripleWitness w;
    return w;
}

}  // namespace twforge
