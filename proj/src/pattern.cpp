#include "twforge/pattern.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "twforge/generators.hpp"

namespace twforge {

namespace {

// Pattern edges in an order that keeps the placed part connected.
std::vector<std::pair<int, int>> connected_edge_order(const Graph& h) {
    std::vector<std::pair<int, int>> order;
    std::vector<char> placed(h.n(), 0);
    std::set<std::pair<int, int>> used;
    auto add_from = [&](int root) {
        placed[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int a = -1;
            std::pair<int, int> pick{-1, -1};
            for (int u : stack) {
                for (int w : h.neighbors(u)) {
                    auto key = std::minmax(u, w);
                    if (!used.count({key.first, key.second})) {
                        a = u;
                        pick = {u, w};
                        break;
                    }
                }
                if (a != -1) break;
            }
            if (a == -1) break;
            used.insert({std::min(pick.first, pick.second), std::max(pick.first, pick.second)});
            order.push_back(pick);
            if (!placed[pick.second]) {
                placed[pick.second] = 1;
                stack.push_back(pick.second);
            }
        }
    };
    for (int v = 0; v < h.n(); ++v)
        if (!placed[v]) add_from(v);
    return order;
}

}  // namespace

CliqueResult find_clique(const Graph& g, int t, Budget& budget) {
    if (t < 1) throw std::invalid_argument("find_clique: t must be >= 1");
    CliqueResult res;
    if (t == 0) return res;
    std::vector<int> clique;
    // Candidates kept sorted ascending for deterministic witnesses.
    std::vector<int> cand;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= t - 1) cand.push_back(v);
    bool aborted = false;

    std::function<bool(std::vector<int>&)> go = [&](std::vector<int>& cands) -> bool {
        if (int(clique.size()) == t) {
            res.status = SearchStatus::Found;
            res.witness = clique;
            return true;
        }
        if (int(clique.size()) + int(cands.size()) < t) return false;
        for (size_t i = 0; i < cands.size(); ++i) {
            if (!budget.tick()) {
                aborted = true;
                return false;
            }
            int v = cands[i];
            std::vector<int> next;
            for (size_t j = i + 1; j < cands.size(); ++j)
                if (g.has_edge(v, cands[j])) next.push_back(cands[j]);
            clique.push_back(v);
            if (go(next)) return true;
            clique.pop_back();
            if (aborted) return false;
        }
        return false;
    };
    go(cand);
    if (res.status != SearchStatus::Found && aborted) res.status = SearchStatus::Unknown;
    return res;
}

BicliqueResult find_induced_biclique(const Graph& g, int t, Budget& budget) {
    if (t < 1) throw std::invalid_argument("find_induced_biclique: t must be >= 1");
    BicliqueResult res;
    std::vector<int> a, b;
    bool aborted = false;

    // a grows with the globally smallest member to break the side symmetry.
    std::function<bool(std::vector<int>&, std::vector<int>&)> go =
        [&](std::vector<int>& cand_a, std::vector<int>& cand_b) -> bool {
        if (int(a.size()) == t && int(b.size()) == t) {
            res.status = SearchStatus::Found;
            res.side_a = a;
            res.side_b = b;
            return true;
        }
        if (int(a.size()) + int(cand_a.size()) < t) return false;
        if (int(b.size()) + int(cand_b.size()) < t) return false;
        bool grow_a = int(a.size()) <= int(b.size()) && int(a.size()) < t;
        if (int(b.size()) >= t) grow_a = true;
        auto& cands = grow_a ? cand_a : cand_b;
        for (size_t i = 0; i < cands.size(); ++i) {
            if (!budget.tick()) {
                aborted = true;
                return false;
            }
            int v = cands[i];
            std::vector<int> na, nb;
            if (grow_a) {
                for (size_t j = i + 1; j < cand_a.size(); ++j)
                    if (!g.has_edge(v, cand_a[j])) na.push_back(cand_a[j]);
                for (int w : cand_b)
                    if (g.has_edge(v, w)) nb.push_back(w);
                a.push_back(v);
            } else {
                for (int w : cand_a)
                    if (g.has_edge(v, w)) na.push_back(w);
                for (size_t j = i + 1; j < cand_b.size(); ++j)
                    if (!g.has_edge(v, cand_b[j])) nb.push_back(cand_b[j]);
                b.push_back(v);
            }
            if (go(na, nb)) return true;
            if (grow_a)
                a.pop_back();
            else
                b.pop_back();
            if (aborted) return false;
        }
        return false;
    };

    // First a-vertex is the smallest vertex of the whole biclique.
    for (int v = 0; v < g.n() && res.status != SearchStatus::Found; ++v) {
        if (g.degree(v) < t) continue;
        if (!budget.tick()) {
            aborted = true;
            break;
        }
        std::vector<int> cand_a, cand_b;
        for (int u = v + 1; u < g.n(); ++u) {
            if (g.has_edge(v, u))
                cand_b.push_back(u);
            else
                cand_a.push_back(u);
        }
        a.assign(1, v);
        b.clear();
        if (go(cand_a, cand_b)) break;
        if (aborted) break;
    }
    if (res.status != SearchStatus::Found && aborted) res.status = SearchStatus::Unknown;
    return res;
}

std::vector<int> SubdivisionWitness::vertices() const {
    std::vector<int> out = branch_image;
    for (const auto& p : edge_paths) out.insert(out.end(), p.begin(), p.end());
    return sorted_unique(std::move(out));
}

namespace {

struct SubdivSearch {
    const Graph& g;
    const Graph& h;
    int min_len;
    Budget& budget;
    std::vector<std::pair<int, int>> order;
    std::vector<std::pair<int, int>> h_edge_list;
    std::vector<int> edge_index_of_order;
    std::vector<int> image;
    std::vector<char> direct;    // per order position: committed length-1 path
    std::vector<char> routed;
    std::vector<std::vector<int>> path;  // per order position
    Bits chosen;
    bool aborted = false;
    int pending_interior_need = 0;

    SubdivSearch(const Graph& g_, const Graph& h_, int ml, Budget& b)
        : g(g_), h(h_), min_len(ml), budget(b), chosen(g_.n()) {
        order = connected_edge_order(h);
        h_edge_list = h.edges();
        for (auto& e : order) {
            auto key = std::minmax(e.first, e.second);
            for (size_t i = 0; i < h_edge_list.size(); ++i)
                if (h_edge_list[i] == std::make_pair(key.first, key.second))
                    edge_index_of_order.push_back(int(i));
        }
        image.assign(h.n(), -1);
        direct.assign(order.size(), 0);
        routed.assign(order.size(), 0);
        path.resize(order.size());
        pending_interior_need = int(order.size()) * (min_len - 1);
    }

    bool try_add(int w, const std::vector<int>& allowed) {
        if (chosen.get(w)) return false;
        Bits expect(g.n());
        for (int x : allowed) expect.set(x);
        Bits got = g.neighbor_bits(w);
        got &= chosen;
        auto gv = got.to_vector();
        auto ev = expect.to_vector();
        if (gv != ev) return false;
        chosen.set(w);
        return true;
    }

    bool place_image(int a, const std::function<bool()>& cont) {
        for (int u = 0; u < g.n(); ++u) {
            if (aborted) return false;
            if (!budget.tick()) {
                aborted = true;
                return false;
            }
            if (chosen.get(u) || g.degree(u) < h.degree(a)) continue;
            // Adjacency to already-chosen vertices is only legal toward
            // images of h-neighbors over unrouted edges, committing those
            // edges to length 1.
            Bits got = g.neighbor_bits(u);
            got &= chosen;
            std::vector<int> hits = got.to_vector();
            std::vector<int> commit;
            bool ok = true;
            for (int x : hits) {
                int b = -1;
                for (int hb : h.neighbors(a))
                    if (image[hb] == x) b = hb;
                if (b == -1 || min_len > 1) {
                    ok = false;
                    break;
                }
                int pos = -1;
                for (size_t i = 0; i < order.size(); ++i) {
                    auto key = std::minmax(order[i].first, order[i].second);
                    if (key == std::minmax(a, b) && !routed[i]) pos = int(i);
                }
                if (pos == -1) {
                    ok = false;
                    break;
                }
                commit.push_back(pos);
            }
            if (!ok) continue;
            chosen.set(u);
            image[a] = u;
            for (int pos : commit) {
                direct[pos] = 1;
                routed[pos] = 1;
            }
            if (cont()) return true;
            for (int pos : commit) {
                direct[pos] = 0;
                routed[pos] = 0;
            }
            image[a] = -1;
            chosen.reset(u);
            if (aborted) return false;
        }
        return false;
    }

    bool route(int pos, int target, std::vector<int>& cur, const std::function<bool()>& cont) {
        int w = cur.back();
        int interior = int(cur.size()) - 1;
        // Interior budget: every unrouted edge still needs min_len-1 inner
        // vertices; stop when the host cannot supply them.
        if (g.n() - chosen.count() < pending_interior_need - std::min(pending_interior_need, interior))
            return false;
        for (int x : g.neighbors(w)) {
            if (aborted) return false;
            if (chosen.get(x)) continue;
            if (!budget.tick()) {
                aborted = true;
                return false;
            }
            Bits got = g.neighbor_bits(x);
            got &= chosen;
            int cnt = got.count();
            bool adj_target = g.neighbor_bits(x).get(target);
            if (cnt == 2 && adj_target && got.get(w) && interior + 2 >= min_len) {
                // Close through x.
                chosen.set(x);
                cur.push_back(x);
                cur.push_back(target);
                routed[pos] = 1;
                path[pos] = cur;
                int saved = pending_interior_need;
                pending_interior_need -= (min_len - 1);
                if (cont()) return true;
                pending_interior_need = saved;
                routed[pos] = 0;
                path[pos].clear();
                cur.pop_back();
                cur.pop_back();
                chosen.reset(x);
                if (aborted) return false;
            }
            if (cnt == 1 && got.get(w) && !adj_target) {
                chosen.set(x);
                cur.push_back(x);
                if (route(pos, target, cur, cont)) return true;
                cur.pop_back();
                chosen.reset(x);
                if (aborted) return false;
            }
        }
        return false;
    }

    bool solve(size_t i) {
        if (i == order.size()) return finish_isolated(0);
        auto [a, b] = order[i];
        if (image[a] == -1) return place_image(a, [&] { return solve(i); });
        if (image[b] == -1) return place_image(b, [&] { return solve(i); });
        if (routed[i]) {
            if (direct[i]) path[i] = {image[a], image[b]};
            return solve(i + 1);
        }
        std::vector<int> cur{image[a]};
        int saved = pending_interior_need;
        bool r = route(int(i), image[b], cur, [&] {
            return solve(i + 1);
        });
        pending_interior_need = saved;
        return r;
    }

    bool finish_isolated(int v) {
        while (v < h.n() && image[v] != -1) ++v;
        if (v == h.n()) return true;
        return place_image(v, [&] { return finish_isolated(v + 1); });
    }
};

}  // namespace

SubdivisionResult find_induced_subdivision(const Graph& g, const Graph& h, int min_edge_len,
                                           Budget& budget) {
    if (min_edge_len < 1)
        throw std::invalid_argument("find_induced_subdivision: min_edge_len must be >= 1");
    SubdivisionResult res;
    long need = h.n() + long(h.m()) * (min_edge_len - 1);
    if (need > g.n()) return res;  // exhaustively none by counting
    SubdivSearch s(g, h, min_edge_len, budget);
    if (s.solve(0)) {
        res.status = SearchStatus::Found;
        res.witness.branch_image = s.image;
        res.witness.edge_paths.resize(h.m());
        for (size_t i = 0; i < s.order.size(); ++i) {
            auto p = s.path[i];
            auto key = std::minmax(s.order[i].first, s.order[i].second);
            // Store paths oriented with the lexicographic edge.
            if (s.image[key.first] != p.front()) std::reverse(p.begin(), p.end());
            res.witness.edge_paths[s.edge_index_of_order[i]] = p;
        }
    } else if (s.aborted) {
        res.status = SearchStatus::Unknown;
    }
    return res;
}

bool check_subdivision_witness(const Graph& g, const Graph& h, int min_edge_len,
                               const SubdivisionWitness& w) {
    if (int(w.branch_image.size()) != h.n()) return false;
    if (sorted_unique(w.branch_image).size() != w.branch_image.size()) return false;
    auto he = h.edges();
    if (w.edge_paths.size() != he.size()) return false;
    std::vector<std::pair<int, int>> expected;
    std::vector<int> interior_all;
    for (size_t e = 0; e < he.size(); ++e) {
        const auto& p = w.edge_paths[e];
        if (int(p.size()) < min_edge_len + 1) return false;
        if (p.front() != w.branch_image[he[e].first] || p.back() != w.branch_image[he[e].second])
            return false;
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            if (!g.has_edge(p[i], p[i + 1])) return false;
            expected.emplace_back(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
        }
        for (size_t i = 1; i + 1 < p.size(); ++i) interior_all.push_back(p[i]);
    }
    auto ints = sorted_unique(interior_all);
    if (ints.size() != interior_all.size()) return false;
    for (int v : ints)
        if (contains(sorted_unique(w.branch_image), v)) return false;
    std::vector<int> all = w.branch_image;
    all.insert(all.end(), ints.begin(), ints.end());
    all = sorted_unique(std::move(all));
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    auto sub = induced_subgraph(g, all);
    std::vector<std::pair<int, int>> actual;
    for (auto [u, v] : sub.graph.edges())
        actual.emplace_back(std::min(sub.to_host[u], sub.to_host[v]),
                            std::max(sub.to_host[u], sub.to_host[v]));
    std::sort(actual.begin(), actual.end());
    return actual == expected;
}

FeebleResult is_feeble(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_feeble: graph must be connected");
    FeebleResult res;
    for (int v = 0; v < g.n(); ++v) {
        Bits allowed(g.n());
        for (int u = 0; u < g.n(); ++u) allowed.set(u);
        allowed.reset(v);
        for (int w : g.neighbors(v)) allowed.reset(w);
        int first = -1;
        for (int u = 0; u < g.n(); ++u)
            if (allowed.get(u)) {
                first = u;
                break;
            }
        if (first == -1) continue;
        auto comp = component_of(g, first, allowed);
        if (int(comp.size()) != allowed.count()) {
            res.feeble = true;
            res.cut_vertex = v;
            return res;
        }
    }
    std::vector<int> branch;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 2) branch.push_back(v);
    auto max_deg_without = [&](const std::vector<int>& s) {
        int md = 0;
        Bits sb = to_bits(g.n(), s);
        for (int v = 0; v < g.n(); ++v) {
            if (sb.get(v)) continue;
            int d = g.degree(v);
            for (int x : s)
                if (g.has_edge(v, x)) --d;
            md = std::max(md, d);
        }
        return md;
    };
    std::vector<std::vector<int>> candidates{{}};
    for (int x : branch) candidates.push_back({x});
    for (size_t i = 0; i < branch.size(); ++i)
        for (size_t j = i + 1; j < branch.size(); ++j) candidates.push_back({branch[i], branch[j]});
    for (auto& s : candidates)
        if (max_deg_without(s) <= 2) {
            res.feeble = true;
            res.via_branch_set = true;
            res.branch_set = s;
            return res;
        }
    return res;
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
    int k = int(cycle.size());
    if (k < 3) return false;
    if (sorted_unique(cycle).size() != cycle.size()) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

HoleResult find_long_hole(const Graph& g, int lambda, Budget& budget) {
    if (lambda < 3) throw std::invalid_argument("find_long_hole: lambda must be >= 3");
    HoleResult res;
    bool aborted = false;
    std::vector<int> path;
    Bits on_path(g.n());

    // Root u is the smallest vertex of the hole; interiors stay above u.
    std::function<bool(int)> extend = [&](int root) -> bool {
        int w = path.back();
        for (int x : g.neighbors(w)) {
            if (aborted) return false;
            if (x <= root || on_path.get(x)) continue;
            if (!budget.tick()) {
                aborted = true;
                return false;
            }
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(x, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            bool adj_root = g.has_edge(x, root);
            path.push_back(x);
            on_path.set(x);
            if (adj_root) {
                if (int(path.size()) > lambda && int(path.size()) >= 4) {
                    res.status = SearchStatus::Found;
                    res.cycle = path;
                    return true;
                }
                // Adjacent to the root: closing is the only continuation.
            } else {
                if (extend(root)) return true;
            }
            on_path.reset(x);
            path.pop_back();
            if (aborted) return false;
        }
        return false;
    };

    for (int u = 0; u < g.n(); ++u) {
        path.assign(1, u);
        on_path.clear();
        on_path.set(u);
        // Break the traversal direction symmetry: second vertex < last.
        const auto& nb = g.neighbors(u);
        for (int second : nb) {
            if (second <= u) continue;
            path.assign(2, u);
            path[1] = second;
            on_path.clear();
            on_path.set(u);
            on_path.set(second);
            if (extend(u)) return res;
            if (aborted) {
                res.status = SearchStatus::Unknown;
                return res;
            }
        }
    }
    if (aborted) res.status = SearchStatus::Unknown;
    return res;
}

ShortSubdivisionResult find_short_complete_subdivision(const Graph& g, int m, int d,
                                                       Budget& budget) {
    if (m < 2 || d < 1)
        throw std::invalid_argument("find_short_complete_subdivision: need m>=2, d>=1");
    ShortSubdivisionResult res;
    if (m > g.n()) return res;
    std::vector<int> branch;
    std::vector<std::vector<int>> paths;
    Bits used(g.n());  // branch vertices + interiors
    bool aborted = false;

    std::vector<std::pair<int, int>> pairs;

    std::function<bool(size_t)> route = [&](size_t pi) -> bool {
        if (pi == pairs.size()) {
            res.status = SearchStatus::Found;
            res.branch_image = branch;
            res.edge_paths = paths;
            return true;
        }
        auto [ai, bi] = pairs[pi];
        int from = branch[ai], to = branch[bi];
        // DFS over paths of length <= d avoiding used vertices.
        std::vector<int> cur{from};
        Bits on(g.n());
        on.set(from);
        std::function<bool()> go = [&]() -> bool {
            int w = cur.back();
            if (int(cur.size()) - 1 > d) return false;
            if (g.has_edge(w, to)) {
                cur.push_back(to);
                paths.push_back(cur);
                std::vector<int> ints(cur.begin() + 1, cur.end() - 1);
                for (int x : ints) used.set(x);
                if (route(pi + 1)) return true;
                for (int x : ints) used.reset(x);
                paths.pop_back();
                cur.pop_back();
                if (aborted) return false;
            }
            if (int(cur.size()) - 1 >= d - 1) return false;
            for (int x : g.neighbors(w)) {
                if (used.get(x) || on.get(x) || x == to) continue;
                if (!budget.tick()) {
                    aborted = true;
                    return false;
                }
                cur.push_back(x);
                on.set(x);
                if (go()) return true;
                on.reset(x);
                cur.pop_back();
                if (aborted) return false;
            }
            return false;
        };
        return go();
    };

    std::function<bool(int)> pick = [&](int from) -> bool {
        if (int(branch.size()) == m) {
            pairs.clear();
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
            return route(0);
        }
        for (int v = from; v < g.n(); ++v) {
            if (used.get(v) || g.degree(v) < m - 1) continue;
            if (!budget.tick()) {
                aborted = true;
                return false;
            }
            branch.push_back(v);
            used.set(v);
            if (pick(v + 1)) return true;
            used.reset(v);
            branch.pop_back();
            if (aborted) return false;
        }
        return false;
    };
    pick(0);
    if (res.status != SearchStatus::Found && aborted) res.status = SearchStatus::Unknown;
    return res;
}

std::vector<int> LineSubdivisionWitness::vertices() const {
    std::vector<int> out;
    for (const auto& c : clique_of) out.insert(out.end(), c.begin(), c.end());
    for (const auto& c : connections) out.insert(out.end(), c.begin(), c.end());
    return sorted_unique(std::move(out));
}

namespace {

struct LineSearch {
    const Graph& g;
    const Graph& h;
    Budget& budget;
    std::vector<std::pair<int, int>> order;
    std::vector<std::pair<int, int>> h_edge_list;
    std::vector<int> edge_index_of_order;
    // corner[edge order pos][0/1] follows order[pos] = (a,b).
    std::vector<std::array<int, 2>> corner;
    std::vector<char> routed;
    std::vector<std::vector<int>> conn;
    std::vector<std::vector<int>> clique_members;  // per h-vertex, placed corners
    Bits chosen;
    bool aborted = false;

    LineSearch(const Graph& g_, const Graph& h_, Budget& b)
        : g(g_), h(h_), budget(b), chosen(g_.n()) {
        order = connected_edge_order(h);
        h_edge_list = h.edges();
        for (auto& e : order) {
            auto key = std::minmax(e.first, e.second);
            for (size_t i = 0; i < h_edge_list.size(); ++i)
                if (h_edge_list[i] == std::make_pair(key.first, key.second))
                    edge_index_of_order.push_back(int(i));
        }
        corner.assign(order.size(), {-1, -1});
        routed.assign(order.size(), 0);
        conn.resize(order.size());
        clique_members.resize(h.n());
    }

    bool tick() {
        if (!budget.tick()) {
            aborted = true;
            return false;
        }
        return true;
    }

    bool place_shared(int pos, int u, const std::function<bool()>& cont) {
        int a = order[pos].first, b = order[pos].second;
        chosen.set(u);
        corner[pos][0] = corner[pos][1] = u;
        clique_members[a].push_back(u);
        clique_members[b].push_back(u);
        routed[pos] = 1;
        conn[pos] = {u};
        if (cont()) return true;
        conn[pos].clear();
        routed[pos] = 0;
        clique_members[b].pop_back();
        clique_members[a].pop_back();
        corner[pos][0] = corner[pos][1] = -1;
        chosen.reset(u);
        return false;
    }

    // Place the corner for side `side` of edge position pos. A candidate's
    // adjacency into the chosen set must be exactly one of: the partial
    // clique of its pattern vertex (plain corner), plus the far corner of
    // this same edge (unit-length connection), or plus the far clique
    // (shared corner, pattern edge not subdivided).
    bool place_corner(int pos, int side, const std::function<bool()>& cont) {
        int a = order[pos].first, b = order[pos].second;
        int v = side == 0 ? a : b;
        int other = corner[pos][1 - side];
        for (int u = 0; u < g.n(); ++u) {
            if (aborted) return false;
            if (!tick()) return false;
            if (chosen.get(u)) continue;
            Bits got = g.neighbor_bits(u);
            got &= chosen;
            auto hits = got.to_vector();
            auto expect = sorted_unique(clique_members[v]);
            if (hits == expect) {
                chosen.set(u);
                corner[pos][side] = u;
                clique_members[v].push_back(u);
                bool r = cont();
                clique_members[v].pop_back();
                corner[pos][side] = -1;
                chosen.reset(u);
                if (r) return true;
                if (aborted) return false;
                if (side == 0 && clique_members[b].empty() && !routed[pos]) {
                    if (place_shared(pos, u, cont)) return true;
                    if (aborted) return false;
                }
                continue;
            }
            if (side == 1 && other != -1 && !routed[pos]) {
                auto want = sorted_unique(clique_members[v]);
                want = set_or(want, {other});
                if (hits == want) {
                    chosen.set(u);
                    corner[pos][side] = u;
                    clique_members[v].push_back(u);
                    routed[pos] = 1;
                    conn[pos] = {other, u};
                    bool r = cont();
                    conn[pos].clear();
                    routed[pos] = 0;
                    clique_members[v].pop_back();
                    corner[pos][side] = -1;
                    chosen.reset(u);
                    if (r) return true;
                    if (aborted) return false;
                    continue;
                }
            }
            if (side == 0 && !routed[pos] && !clique_members[b].empty()) {
                auto want = set_or(sorted_unique(clique_members[a]),
                                   sorted_unique(clique_members[b]));
                if (hits == want) {
                    if (place_shared(pos, u, cont)) return true;
                    if (aborted) return false;
                }
            }
        }
        return false;
    }

    bool route(int pos, std::vector<int>& cur, const std::function<bool()>& cont) {
        int w = cur.back();
        int target = corner[pos][1];
        for (int x : g.neighbors(w)) {
            if (aborted) return false;
            if (chosen.get(x)) continue;
            if (!tick()) return false;
            Bits got = g.neighbor_bits(x);
            got &= chosen;
            int cnt = got.count();
            bool adj_t = g.neighbor_bits(x).get(target);
            if (cnt == 2 && adj_t && got.get(w)) {
                chosen.set(x);
                cur.push_back(x);
                cur.push_back(target);
                routed[pos] = 1;
                conn[pos] = cur;
                if (cont()) return true;
                conn[pos].clear();
                routed[pos] = 0;
                cur.pop_back();
                cur.pop_back();
                chosen.reset(x);
                if (aborted) return false;
            }
            if (cnt == 1 && got.get(w) && !adj_t) {
                chosen.set(x);
                cur.push_back(x);
                if (route(pos, cur, cont)) return true;
                cur.pop_back();
                chosen.reset(x);
                if (aborted) return false;
            }
        }
        return false;
    }

    bool solve(size_t i) {
        if (i == order.size()) return true;
        int pos = int(i);
        if (routed[pos]) return solve(i + 1);
        if (corner[pos][0] == -1)
            return place_corner(pos, 0, [&] { return solve(i); });
        if (corner[pos][1] == -1)
            return place_corner(pos, 1, [&] { return solve(i); });
        std::vector<int> cur{corner[pos][0]};
        return route(pos, cur, [&] { return solve(i + 1); });
    }
};

}  // namespace

LineSubdivisionResult find_induced_line_subdivision(const Graph& g, const Graph& h,
                                                    Budget& budget) {
    LineSubdivisionResult res;
    if (h.m() > g.n()) return res;  // a line graph of any subdivision has >= m(h) vertices
    LineSearch s(g, h, budget);
    if (s.solve(0)) {
        res.status = SearchStatus::Found;
        res.witness.clique_of.resize(h.n());
        for (int v = 0; v < h.n(); ++v) res.witness.clique_of[v] = s.clique_members[v];
        res.witness.connections.resize(h.m());
        for (size_t i = 0; i < s.order.size(); ++i) {
            auto p = s.conn[i];
            auto key = std::minmax(s.order[i].first, s.order[i].second);
            if (key.first != s.order[i].first) std::reverse(p.begin(), p.end());
            res.witness.connections[s.edge_index_of_order[i]] = p;
        }
    } else if (s.aborted) {
        res.status = SearchStatus::Unknown;
    }
    return res;
}

bool check_line_subdivision_witness(const Graph& g, const Graph& h,
                                    const LineSubdivisionWitness& w) {
    if (int(w.clique_of.size()) != h.n()) return false;
    auto he = h.edges();
    if (w.connections.size() != he.size()) return false;
    // Role bookkeeping: every host vertex is either one edge's interior, a
    // corner of exactly one pattern vertex, or the shared corner of the two
    // ends of one unsubdivided pattern edge.
    std::map<int, std::vector<std::pair<int, int>>> corner_roles;  // vertex -> (h vertex, edge)
    std::map<int, int> interior_roles;
    for (int v = 0; v < h.n(); ++v) {
        if (int(w.clique_of[v].size()) != h.degree(v)) return false;
        if (sorted_unique(w.clique_of[v]).size() != w.clique_of[v].size()) return false;
        if (!is_clique(g, w.clique_of[v])) return false;
    }
    std::vector<std::pair<int, int>> expected;
    for (int v = 0; v < h.n(); ++v)
        for (size_t i = 0; i < w.clique_of[v].size(); ++i)
            for (size_t j = i + 1; j < w.clique_of[v].size(); ++j)
                expected.emplace_back(std::min(w.clique_of[v][i], w.clique_of[v][j]),
                                      std::max(w.clique_of[v][i], w.clique_of[v][j]));
    for (size_t e = 0; e < he.size(); ++e) {
        const auto& p = w.connections[e];
        if (p.empty()) return false;
        auto in_clique = [&](int hv, int x) {
            return std::find(w.clique_of[hv].begin(), w.clique_of[hv].end(), x) !=
                   w.clique_of[hv].end();
        };
        if (!in_clique(he[e].first, p.front()) || !in_clique(he[e].second, p.back()))
            return false;
        corner_roles[p.front()].emplace_back(he[e].first, int(e));
        if (p.size() > 1) corner_roles[p.back()].emplace_back(he[e].second, int(e));
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            if (!g.has_edge(p[i], p[i + 1])) return false;
            expected.emplace_back(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
        }
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            if (interior_roles.count(p[i])) return false;
            interior_roles[p[i]] = int(e);
        }
    }
    for (auto& [x, roles] : corner_roles) {
        if (interior_roles.count(x)) return false;
        if (roles.size() > 2) return false;
        if (roles.size() == 2 &&
            (roles[0].second != roles[1].second || roles[0].first == roles[1].first))
            return false;
    }
    // Each clique member must serve exactly one incident pattern edge.
    for (int v = 0; v < h.n(); ++v) {
        std::vector<int> served;
        for (size_t e = 0; e < he.size(); ++e) {
            if (he[e].first == v) served.push_back(w.connections[e].front());
            if (he[e].second == v) served.push_back(w.connections[e].back());
        }
        std::sort(served.begin(), served.end());
        auto members = w.clique_of[v];
        std::sort(members.begin(), members.end());
        if (served != members) return false;
    }
    auto all = w.vertices();
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    auto sub = induced_subgraph(g, all);
    std::vector<std::pair<int, int>> actual;
    for (auto [u, v] : sub.graph.edges())
        actual.emplace_back(std::min(sub.to_host[u], sub.to_host[v]),
                            std::max(sub.to_host[u], sub.to_host[v]));
    std::sort(actual.begin(), actual.end());
    return actual == expected;
}

namespace {

long count_triangles(const Graph& g) {
    long c = 0;
    for (auto [u, v] : g.edges())
        for (int w : g.neighbors(u))
            if (w > v && g.has_edge(v, w)) ++c;
    return c;
}

}  // namespace

ObstructionReport is_t_clean(const Graph& g, int t, Budget& budget) {
    if (t < 2) throw std::invalid_argument("is_t_clean: t must be >= 2");
    ObstructionReport rep;
    auto cl = find_clique(g, t, budget);
    if (cl.status == SearchStatus::Found) {
        rep.kind = ObstructionReport::Kind::Clique;
        rep.clique = cl.witness;
        return rep;
    }
    rep.budget_exhausted |= (cl.status == SearchStatus::Unknown);
    auto bi = find_induced_biclique(g, t, budget);
    if (bi.status == SearchStatus::Found) {
        rep.kind = ObstructionReport::Kind::Biclique;
        rep.biclique_a = bi.side_a;
        rep.biclique_b = bi.side_b;
        return rep;
    }
    rep.budget_exhausted |= (bi.status == SearchStatus::Unknown);

    // Wall obstructions; cheap counting prunes make small hosts exhaustive.
    Graph wall = make_wall(t).graph;
    if (wall.n() <= g.n()) {
        auto ws = find_induced_subdivision(g, wall, 1, budget);
        if (ws.status == SearchStatus::Found) {
            rep.kind = ObstructionReport::Kind::WallSubdivision;
            rep.wall = ws.witness;
            return rep;
        }
        rep.budget_exhausted |= (ws.status == SearchStatus::Unknown);
    }
    if (wall.m() <= g.n()) {
        int deg3 = 0;
        for (int v = 0; v < wall.n(); ++v)
            if (wall.degree(v) == 3) ++deg3;
        if (count_triangles(g) >= deg3) {
            auto ls = find_induced_line_subdivision(g, wall, budget);
            if (ls.status == SearchStatus::Found) {
                rep.kind = ObstructionReport::Kind::LineOfWallSubdivision;
                rep.line_wall = ls.witness;
                return rep;
            }
            rep.budget_exhausted |= (ls.status == SearchStatus::Unknown);
        }
    }
    return rep;
}

}  // namespace twforge
