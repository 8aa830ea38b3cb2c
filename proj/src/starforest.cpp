#include "twforge/starforest.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "twforge/blocks.hpp"
#include "twforge/pattern.hpp"

namespace twforge {

namespace {

// Greedy chord shortcutting: any walk contains an induced path between its
// ends within its own vertex set.
std::vector<int> shortcut_to_induced(const Graph& g, const std::vector<int>& path) {
    std::vector<int> cur = path;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 2 < cur.size() && !changed; ++i)
            for (size_t j = cur.size() - 1; j > i + 1; --j)
                if (g.has_edge(cur[i], cur[j])) {
                    cur.erase(cur.begin() + i + 1, cur.begin() + j);
                    changed = true;
                    break;
                }
    }
    return cur;
}

// Exact maximum stable set for small graphs, greedy beyond.
std::vector<int> stable_set(const Graph& g, int exact_limit = 20) {
    if (g.n() <= exact_limit) {
        std::vector<int> cur, best;
        std::function<void(int)> go = [&](int from) {
            if (int(cur.size()) > int(best.size())) best = cur;
            for (int v = from; v < g.n(); ++v) {
                bool ok = true;
                for (int w : cur)
                    if (g.has_edge(v, w)) ok = false;
                if (!ok) continue;
                cur.push_back(v);
                go(v + 1);
                cur.pop_back();
            }
        };
        go(0);
        return best;
    }
    std::vector<char> dead(g.n(), 0);
    std::vector<int> out;
    while (true) {
        int pick = -1, bd = 1 << 30;
        for (int v = 0; v < g.n(); ++v) {
            if (dead[v]) continue;
            int d = 0;
            for (int w : g.neighbors(v)) d += !dead[w];
            if (d < bd) {
                bd = d;
                pick = v;
            }
        }
        if (pick == -1) break;
        out.push_back(pick);
        dead[pick] = 1;
        for (int w : g.neighbors(pick)) dead[w] = 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct PrefixRouting {
    int partner = -1;
    std::vector<std::vector<int>> prefixes;  // each x .. tip, length lambda
    std::vector<std::vector<int>> full_paths;
};

// Internally disjoint induced x->y paths truncated to length-lambda
// prefixes at x.
PrefixRouting route_prefixes(const Graph& g, const std::vector<int>& s, int x, int lambda) {
    PrefixRouting out;
    Bits all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    auto dist = bfs_distances(g, x, all);
    // Partner: nearest other S vertex by hops, smallest id on ties.
    for (int y : s) {
        if (y == x || dist[y] == -1) continue;
        if (out.partner == -1 || dist[y] < dist[out.partner]) out.partner = y;
    }
    if (out.partner == -1) return out;
    auto sys = pair_connectivity(g, x, out.partner);
    for (auto& p : sys.paths) {
        auto ind = shortcut_to_induced(g, p);
        if (int(ind.size()) < lambda + 2) continue;  // prefix must not reach y
        out.full_paths.push_back(ind);
        out.prefixes.emplace_back(ind.begin(), ind.begin() + lambda + 1);
    }
    return out;
}

Graph conflict_graph(const Graph& g, const std::vector<std::vector<int>>& prefixes) {
    // i ~ j iff the prefixes minus the shared root touch.
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < prefixes.size(); ++i)
        for (size_t j = i + 1; j < prefixes.size(); ++j) {
            std::vector<int> a(prefixes[i].begin() + 1, prefixes[i].end());
            std::vector<int> b(prefixes[j].begin() + 1, prefixes[j].end());
            if (!is_anticomplete(g, a, b)) es.emplace_back(int(i), int(j));
        }
    return Graph(int(prefixes.size()), es);
}

}  // namespace

StarWitness plant_star(const Graph& g, const std::vector<int>& s, int x, int delta, int lambda) {
    if (delta < 1 || lambda < 1)
        throw std::invalid_argument("plant_star: need delta>=1, lambda>=1");
    auto sv = sorted_unique(s);
    if (!contains(sv, x)) throw std::invalid_argument("plant_star: x must belong to S");
    StarWitness out;
    auto routing = route_prefixes(g, sv, x, lambda);
    if (routing.partner == -1) {
        out.failure = "no reachable partner in S";
        return out;
    }
    if (int(routing.prefixes.size()) < delta) {
        out.failure = "only " + std::to_string(routing.prefixes.size()) +
                      " usable disjoint paths toward partner " + std::to_string(routing.partner);
        return out;
    }
    Graph gamma = conflict_graph(g, routing.prefixes);
    auto stable = stable_set(gamma);
    if (int(stable.size()) < delta) {
        out.failure = "conflict graph stable set smaller than delta";
        // Mirror the dichotomy: report a large mutual-conflict clique when
        // one exists among the prefixes.
        auto cliques = maximal_cliques(gamma);
        for (auto& c : cliques)
            if (int(c.size()) > int(out.gamma_clique.size())) out.gamma_clique = c;
        out.gamma_clique_found = int(out.gamma_clique.size()) >= delta;
        return out;
    }
    out.ok = true;
    out.root = x;
    for (int i = 0; i < delta; ++i) {
        auto p = routing.prefixes[stable[i]];
        std::reverse(p.begin(), p.end());  // leaf -> root
        out.stems.push_back(std::move(p));
    }
    return out;
}

PlantedForestCert plant_forest(const Graph& g, const std::vector<int>& s, int theta, int delta,
                               int lambda) {
    if (theta < 1) throw std::invalid_argument("plant_forest: theta must be >= 1");
    PlantedForestCert out;
    out.s = sorted_unique(s);
    int planted = 0;
    for (int x : out.s) {
        if (planted == theta) break;
        auto star = plant_star(g, out.s, x, delta, lambda);
        if (!star.ok) continue;
        RootedStarForest::Component comp;
        comp.root = star.root;
        comp.stems = star.stems;
        // Tentatively add; keep only if anticomplete to what is planted.
        RootedStarForest trial = out.forest;
        trial.components.push_back(comp);
        if (!check_forest_in_host(g, trial)) continue;
        out.forest = std::move(trial);
        ++planted;
    }
    if (planted < theta) {
        out.failure = "planted only " + std::to_string(planted) + " of " + std::to_string(theta) +
                      " components";
        return out;
    }
    out.ok = true;
    return out;
}

bool check_planted(const Graph& g, const PlantedForestCert& cert) {
    if (!check_forest_in_host(g, cert.forest)) return false;
    auto sset = sorted_unique(cert.s);
    for (int r : cert.forest.roots())
        if (!contains(sset, r)) return false;
    return true;
}

HoleExtraction extract_long_hole(const Graph& g, const std::vector<int>& s, int lambda) {
    if (lambda < 1) throw std::invalid_argument("extract_long_hole: lambda must be >= 1");
    HoleExtraction out;
    auto sv = sorted_unique(s);
    for (int x : sv) {
        auto routing = route_prefixes(g, sv, x, lambda);
        if (routing.prefixes.size() < 2) continue;
        // A pair of paths with anticomplete prefixes past the root.
        int pi = -1, pj = -1;
        for (size_t i = 0; i < routing.prefixes.size() && pi == -1; ++i)
            for (size_t j = i + 1; j < routing.prefixes.size(); ++j) {
                std::vector<int> a(routing.prefixes[i].begin() + 1, routing.prefixes[i].end());
                std::vector<int> b(routing.prefixes[j].begin() + 1, routing.prefixes[j].end());
                if (is_anticomplete(g, a, b)) {
                    pi = int(i);
                    pj = int(j);
                    break;
                }
            }
        if (pi == -1) {
            out.failure = "no pair of anticomplete prefixes at " + std::to_string(x);
            continue;
        }
        const auto& p1 = routing.full_paths[pi];
        const auto& p2 = routing.full_paths[pj];
        // First interior vertex of P1 with a neighbor in P2 minus x.
        int z_idx = -1, w_idx = -1;
        for (size_t i = 1; i + 1 < p1.size() && z_idx == -1; ++i)
            for (size_t j = 1; j < p2.size(); ++j)
                if (g.has_edge(p1[i], p2[j])) {
                    z_idx = int(i);
                    w_idx = int(j);
                    break;
                }
        if (z_idx == -1) continue;
        std::vector<int> cycle(p1.begin(), p1.begin() + z_idx + 1);
        for (int j = w_idx; j >= 1; --j) cycle.push_back(p2[j]);
        if (!is_induced_cycle(g, cycle)) {
            out.failure = "assembled cycle not induced";
            continue;
        }
        if (int(cycle.size()) < lambda + 3) {
            out.failure = "assembled cycle shorter than lambda+3";
            continue;
        }
        out.ok = true;
        out.cycle = cycle;
        out.failure.clear();
        return out;
    }
    if (out.failure.empty()) out.failure = "no suitable path pair found";
    return out;
}

}  // namespace twforge
