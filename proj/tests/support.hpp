#pragma once

// Shared test oracles, independent of the implementation paths they check.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "twforge/graph.hpp"
#include "twforge/rng.hpp"

namespace testsupport {

using twforge::Bits;
using twforge::Graph;
using twforge::Rng;

// Girth by shortest cycle through every edge: drop the edge, find the
// shortest remaining path between its ends.
inline std::optional<int> girth_oracle(const Graph& g) {
    int best = -1;
    for (auto [u, v] : g.edges()) {
        std::vector<int> dist(g.n(), -1);
        std::deque<int> q{u};
        dist[u] = 0;
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            for (int w : g.neighbors(a)) {
                if (a == u && w == v) continue;
                if (a == v && w == u) continue;
                if (dist[w] == -1) {
                    dist[w] = dist[a] + 1;
                    q.push_back(w);
                }
            }
        }
        if (dist[v] != -1) {
            int c = dist[v] + 1;
            if (best == -1 || c < best) best = c;
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

// Minimum x-y vertex separator by subset enumeration (small graphs only).
inline int min_separator_oracle(const Graph& g, int x, int y) {
    if (g.has_edge(x, y)) return g.n();  // never separable
    std::vector<int> others;
    for (int v = 0; v < g.n(); ++v)
        if (v != x && v != y) others.push_back(v);
    int n = int(others.size());
    int best = n;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        Bits allowed(g.n());
        for (int v = 0; v < g.n(); ++v) allowed.set(v);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) allowed.reset(others[i]);
        auto comp = twforge::component_of(g, x, allowed);
        if (!twforge::contains(comp, y)) best = size;
    }
    return best;
}

// Any path of length at most d between u and v inside allowed?
inline bool short_path_exists(const Graph& g, int u, int v, int d, const Bits& allowed) {
    if (!allowed.get(u) || !allowed.get(v)) return false;
    std::vector<int> dist(g.n(), -1);
    std::deque<int> q{u};
    dist[u] = 0;
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        if (dist[a] >= d) continue;
        for (int w : g.neighbors(a)) {
            if (!allowed.get(w) || dist[w] != -1) continue;
            dist[w] = dist[a] + 1;
            q.push_back(w);
        }
    }
    return dist[v] != -1 && dist[v] <= d;
}

// Euler check of an explicit rotation system: a certified planarity oracle
// for generators whose layout is known.
inline bool planar_by_rotation(const Graph& g, const std::vector<std::vector<int>>& rotation) {
    if (g.n() == 0) return true;
    // Face tracing over directed darts: next dart of (u,v) is (v,w) where w
    // follows u in the rotation at v.
    std::map<std::pair<int, int>, int> pos;
    for (int v = 0; v < g.n(); ++v)
        for (int i = 0; i < int(rotation[v].size()); ++i) pos[{v, rotation[v][i]}] = i;
    std::map<std::pair<int, int>, bool> used;
    for (auto [u, v] : g.edges()) {
        used[{u, v}] = false;
        used[{v, u}] = false;
    }
    int faces = 0;
    for (auto& [dart, flag] : used) {
        if (flag) continue;
        ++faces;
        auto cur = dart;
        while (!used[cur]) {
            used[cur] = true;
            auto [u, v] = cur;
            int i = pos.at({v, u});
            int w = rotation[v][(i + 1) % rotation[v].size()];
            cur = {v, w};
        }
    }
    // Components for the Euler formula.
    int comps = int(twforge::components(g).size());
    return g.n() - g.m() + faces == 1 + comps;
}

inline Graph random_graph(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) es.emplace_back(u, v);
    return Graph(n, es);
}

inline Graph random_connected_graph(Rng& rng, int n, double p) {
    auto g = random_graph(rng, n, p);
    auto comps = twforge::components(g);
    std::vector<std::pair<int, int>> es = g.edges();
    for (size_t i = 1; i < comps.size(); ++i) {
        int a = comps[i - 1][rng.below(int(comps[i - 1].size()))];
        int b = comps[i][rng.below(int(comps[i].size()))];
        es.emplace_back(a, b);
    }
    Graph out(n, es);
    if (twforge::is_connected(out)) return out;
    return random_connected_graph(rng, n, p);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph(a + b, es);
}

inline Graph grid_graph(int rows, int cols) {
    std::vector<std::pair<int, int>> es;
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) es.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, es);
}

// Random connected induced subgraph grown by BFS with random frontier picks.
inline std::vector<int> random_connected_subset(Rng& rng, const Graph& g, int target) {
    int start = rng.below(g.n());
    std::vector<int> chosen{start};
    Bits in(g.n());
    in.set(start);
    while (int(chosen.size()) < target) {
        std::vector<int> frontier;
        for (int v : chosen)
            for (int w : g.neighbors(v))
                if (!in.get(w)) frontier.push_back(w);
        if (frontier.empty()) break;
        int pick = frontier[rng.below(int(frontier.size()))];
        in.set(pick);
        chosen.push_back(pick);
    }
    return twforge::sorted_unique(chosen);
}

}  // namespace testsupport
