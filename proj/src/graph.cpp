#include "twforge/graph.hpp"

#include <deque>
#include <stdexcept>

namespace twforge {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.assign(n, {});
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: vertex id out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    m_ = 0;
    adj_bits_.assign(n, Bits(n));
    for (int v = 0; v < n; ++v) {
        adj_[v] = sorted_unique(std::move(adj_[v]));
        for (int w : adj_[v]) adj_bits_[v].set(w);
        m_ += int(adj_[v].size());
    }
    m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return adj_bits_[u].get(v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool is_path(const Graph& g, const PathSeq& p) {
    const auto& vs = p.vertices;
    if (vs.empty()) return false;
    std::vector<int> seen = sorted_unique(vs);
    if (seen.size() != vs.size()) return false;
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[i + 1])) return false;
    return true;
}

bool is_induced_path(const Graph& g, const PathSeq& p) {
    if (!is_path(g, p)) return false;
    const auto& vs = p.vertices;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 2; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) return false;
    return true;
}

bool is_separation(const Graph& g, const Separation& s) {
    if (s.left.empty() || s.right.empty()) return false;
    std::vector<int> all;
    for (const auto* part : {&s.left, &s.middle, &s.right})
        for (int v : *part) all.push_back(v);
    auto u = sorted_unique(all);
    if (int(u.size()) != int(all.size()) || int(u.size()) != g.n()) return false;
    return is_anticomplete(g, s.left, s.right);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& x) {
    InducedSubgraph out;
    out.to_host = sorted_unique(x);
    for (int v : out.to_host)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    out.from_host.assign(g.n(), -1);
    for (int i = 0; i < int(out.to_host.size()); ++i) out.from_host[out.to_host[i]] = i;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < int(out.to_host.size()); ++i)
        for (int w : g.neighbors(out.to_host[i])) {
            int j = out.from_host[w];
            if (j > i) es.emplace_back(i, j);
        }
    out.graph = Graph(int(out.to_host.size()), es);
    return out;
}

LineGraph line_graph(const Graph& g) {
    LineGraph out;
    out.edge_of_vertex = g.edges();
    std::vector<std::vector<int>> at(g.n());
    for (int i = 0; i < int(out.edge_of_vertex.size()); ++i) {
        at[out.edge_of_vertex[i].first].push_back(i);
        at[out.edge_of_vertex[i].second].push_back(i);
    }
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < g.n(); ++v)
        for (size_t a = 0; a < at[v].size(); ++a)
            for (size_t b = a + 1; b < at[v].size(); ++b)
                es.emplace_back(at[v][a], at[v][b]);
    out.graph = Graph(int(out.edge_of_vertex.size()), es);
    return out;
}

Subdivision subdivide(const Graph& g, const std::vector<int>& lengths) {
    auto es = g.edges();
    if (lengths.size() != es.size())
        throw std::invalid_argument("subdivide: one length per edge required");
    for (int len : lengths)
        if (len < 1) throw std::invalid_argument("subdivide: edge length must be >= 1");
    Subdivision out;
    out.branch_of.resize(g.n());
    for (int v = 0; v < g.n(); ++v) out.branch_of[v] = v;
    int next = g.n();
    std::vector<std::pair<int, int>> new_edges;
    for (size_t e = 0; e < es.size(); ++e) {
        auto [u, v] = es[e];
        std::vector<int> path{u};
        for (int i = 1; i < lengths[e]; ++i) path.push_back(next++);
        path.push_back(v);
        for (size_t i = 0; i + 1 < path.size(); ++i) new_edges.emplace_back(path[i], path[i + 1]);
        out.edge_paths.push_back(std::move(path));
    }
    out.graph = Graph(next, new_edges);
    return out;
}

Subdivision subdivide_uniform(const Graph& g, int length) {
    return subdivide(g, std::vector<int>(g.m(), length));
}

std::optional<int> girth(const Graph& g) {
    // BFS from each vertex; any non-tree edge closes a walk of length
    // dist[u]+dist[v]+1 which contains a cycle no longer than itself, so the
    // minimum over all starts is exact.
    int best = -1;
    std::vector<int> dist(g.n()), par(g.n());
    for (int s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (best != -1 && 2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    q.push_back(w);
                } else if (w != par[u]) {
                    int c = dist[u] + dist[w] + 1;
                    if (best == -1 || c < best) best = c;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (int w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        out.push_back(sorted_unique(std::move(comp)));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return components(g).size() == 1;
}

std::vector<int> component_of(const Graph& g, int v, const Bits& allowed) {
    std::vector<int> comp{v};
    Bits seen(g.n());
    seen.set(v);
    for (size_t i = 0; i < comp.size(); ++i)
        for (int w : g.neighbors(comp[i]))
            if (allowed.get(w) && !seen.get(w)) {
                seen.set(w);
                comp.push_back(w);
            }
    return sorted_unique(std::move(comp));
}

std::vector<int> bfs_distances(const Graph& g, int src, const Bits& allowed) {
    std::vector<int> dist(g.n(), -1);
    if (!allowed.get(src)) return dist;
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u))
            if (allowed.get(w) && dist[w] == -1) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

std::vector<int> simplicial_set(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (is_clique(g, g.neighbors(v))) out.push_back(v);
    return out;
}

SuppressResult suppress_bumps(const Graph& g, const std::vector<int>& s) {
    for (int v : s)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("suppress_bumps: S out of range");
    Bits in_s = to_bits(g.n(), s);
    // Work on a mutable adjacency copy over original ids.
    std::vector<std::vector<int>> adj(g.n());
    for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
    std::vector<char> alive(g.n(), 1);
    auto has = [&](int u, int v) { return contains(adj[u], v); };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n(); ++v) {
            if (!alive[v] || in_s.get(v) || adj[v].size() != 2) continue;
            int a = adj[v][0], b = adj[v][1];
            if (has(a, b)) continue;
            alive[v] = 0;
            adj[v].clear();
            auto drop = [&](int x) {
                for (auto& lst : {&adj[a], &adj[b]}) {
                    auto it = std::lower_bound(lst->begin(), lst->end(), x);
                    if (it != lst->end() && *it == x) lst->erase(it);
                }
            };
            drop(v);
            adj[a].insert(std::lower_bound(adj[a].begin(), adj[a].end(), b), b);
            adj[b].insert(std::lower_bound(adj[b].begin(), adj[b].end(), a), a);
            changed = true;
            break;
        }
    }
    SuppressResult out;
    std::vector<int> from_old(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (alive[v]) {
            from_old[v] = int(out.kept.size());
            out.kept.push_back(v);
        }
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < g.n(); ++v)
        if (alive[v])
            for (int w : adj[v])
                if (v < w) es.emplace_back(from_old[v], from_old[w]);
    out.graph = Graph(int(out.kept.size()), es);
    return out;
}

Contraction contract_sets(const Graph& g, const std::vector<std::vector<int>>& parts) {
    std::vector<int> image(g.n(), -1);
    Bits all(g.n());
    for (int p = 0; p < int(parts.size()); ++p) {
        if (parts[p].empty()) throw std::invalid_argument("contract_sets: empty part");
        Bits part_bits = to_bits(g.n(), parts[p]);
        auto comp = component_of(g, parts[p][0], part_bits);
        if (comp.size() != sorted_unique(parts[p]).size())
            throw std::invalid_argument("contract_sets: part not connected");
        for (int v : parts[p]) {
            if (v < 0 || v >= g.n()) throw std::invalid_argument("contract_sets: out of range");
            if (all.get(v)) throw std::invalid_argument("contract_sets: parts overlap");
            all.set(v);
            image[v] = p;
        }
    }
    int next = int(parts.size());
    for (int v = 0; v < g.n(); ++v)
        if (image[v] == -1) image[v] = next++;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (image[u] != image[v]) es.emplace_back(image[u], image[v]);
    Contraction out;
    out.graph = Graph(next, es);
    out.image = std::move(image);
    return out;
}

namespace {

void bron_kerbosch(const Graph& r, std::vector<int>& cur, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out, int cap) {
    if (int(out.size()) >= cap) return;
    if (p.empty() && x.empty()) {
        out.push_back(cur);
        return;
    }
    int pivot = -1, best = -1;
    for (int v : p)
        if (r.degree(v) > best) {
            best = r.degree(v);
            pivot = v;
        }
    for (int v : x)
        if (r.degree(v) > best) {
            best = r.degree(v);
            pivot = v;
        }
    std::vector<int> branch;
    for (int v : p)
        if (pivot == -1 || !r.has_edge(pivot, v)) branch.push_back(v);
    for (int v : branch) {
        std::vector<int> np, nx;
        for (int w : p)
            if (r.has_edge(v, w)) np.push_back(w);
        for (int w : x)
            if (r.has_edge(v, w)) nx.push_back(w);
        cur.push_back(v);
        bron_kerbosch(r, cur, np, nx, out, cap);
        cur.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur, p, x;
    for (int v = 0; v < g.n(); ++v) p.push_back(v);
    bron_kerbosch(g, cur, p, x, out, cap);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_clique(const Graph& g, const std::vector<int>& xs) {
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (!g.has_edge(xs[i], xs[j])) return false;
    return true;
}

bool is_stable_set(const Graph& g, const std::vector<int>& xs) {
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (g.has_edge(xs[i], xs[j])) return false;
    return true;
}

bool is_anticomplete(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
        for (int v : b)
            if (u == v || g.has_edge(u, v)) return false;
    return true;
}

bool is_tree(const Graph& g) {
    return g.m() == g.n() - 1 && is_connected(g);
}

std::vector<int> neighborhood_of_set(const Graph& g, const std::vector<int>& xs) {
    Bits in = to_bits(g.n(), xs);
    std::vector<int> out;
    for (int v : xs)
        for (int w : g.neighbors(v))
            if (!in.get(w)) out.push_back(w);
    return sorted_unique(std::move(out));
}

}  // namespace twforge
