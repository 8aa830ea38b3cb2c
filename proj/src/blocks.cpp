#include "twforge/blocks.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace twforge {

namespace {

// Unit-capacity max flow on the node-split digraph.
struct FlowNet {
    struct Arc {
        int to, cap, rev;
        bool forward;
        int orig;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(int n) : arcs(n) {}

    void add(int a, int b, int cap) {
        arcs[a].push_back({b, cap, int(arcs[b].size()), true, cap});
        arcs[b].push_back({a, 0, int(arcs[a].size()) - 1, false, 0});
    }

    int augment(int s, int t) {
        std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
        std::deque<int> q{s};
        pred[s] = {s, -1};
        while (!q.empty() && pred[t].first == -1) {
            int u = q.front();
            q.pop_front();
            for (int i = 0; i < int(arcs[u].size()); ++i) {
                const Arc& a = arcs[u][i];
                if (a.cap > 0 && pred[a.to].first == -1) {
                    pred[a.to] = {u, i};
                    q.push_back(a.to);
                }
            }
        }
        if (pred[t].first == -1) return 0;
        int v = t;
        while (v != s) {
            auto [u, i] = pred[v];
            arcs[u][i].cap -= 1;
            arcs[arcs[u][i].to][arcs[u][i].rev].cap += 1;
            v = u;
        }
        return 1;
    }

    // Consumes one unit of flow on some forward arc out of u; -1 when none.
    int consume(int u) {
        for (auto& a : arcs[u]) {
            if (!a.forward || a.orig - a.cap <= 0) continue;
            a.cap += 1;
            arcs[a.to][a.rev].cap -= 1;
            return a.to;
        }
        return -1;
    }
};

PathSystem flow_paths(const Graph& g, int x, int y, const Bits& allowed) {
    // in(v)=2v, out(v)=2v+1; source x_out, sink y_in.
    FlowNet net(2 * g.n());
    const int big = g.n() + 1;
    for (int v = 0; v < g.n(); ++v) {
        if (!allowed.get(v)) continue;
        net.add(2 * v, 2 * v + 1, (v == x || v == y) ? big : 1);
    }
    for (auto [u, v] : g.edges()) {
        if (!allowed.get(u) || !allowed.get(v)) continue;
        net.add(2 * u + 1, 2 * v, 1);
        net.add(2 * v + 1, 2 * u, 1);
    }
    int flow = 0;
    while (net.augment(2 * x + 1, 2 * y) == 1) ++flow;
    PathSystem out;
    out.count = flow;
    for (int p = 0; p < flow; ++p) {
        std::vector<int> walk{x};
        int cur = 2 * x + 1;
        while (true) {
            int nxt = net.consume(cur);
            if (nxt == -1) break;
            if ((nxt & 1) == 0) walk.push_back(nxt / 2);
            cur = nxt;
            if (nxt == 2 * y) break;
        }
        if (walk.back() != y) continue;
        // Splice out any loops a cancelling augmentation may have left.
        std::vector<int> path;
        std::vector<int> seen_at(g.n(), -1);
        for (int v : walk) {
            if (seen_at[v] != -1)
                path.resize(seen_at[v] + 1);
            else {
                path.push_back(v);
            }
            seen_at[v] = -1;
            for (int i = 0; i < int(path.size()); ++i) seen_at[path[i]] = i;
        }
        out.paths.push_back(path);
    }
    return out;
}

}  // namespace

PathSystem pair_connectivity(const Graph& g, int x, int y) {
    if (x == y || x < 0 || y < 0 || x >= g.n() || y >= g.n())
        throw std::invalid_argument("pair_connectivity: need two distinct vertices");
    Bits all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    return flow_paths(g, x, y, all);
}

std::optional<std::vector<int>> find_k_block(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_k_block: k must be >= 1");
    // Relation graph: unseparable pairs.
    std::vector<std::pair<int, int>> rel;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v))
                rel.emplace_back(u, v);
            else if (pair_connectivity(g, u, v).count >= k)
                rel.emplace_back(u, v);
        }
    Graph r(g.n(), rel);
    auto cliques = maximal_cliques(r);
    std::optional<std::vector<int>> best;
    for (auto& c : cliques) {
        if (int(c.size()) < k) continue;
        if (!best || c.size() > best->size() || (c.size() == best->size() && c < *best)) best = c;
    }
    return best;
}

BlockCheck verify_strong_block(const Graph& g, const StrongBlockCert& cert, int k) {
    BlockCheck out;
    auto b = sorted_unique(cert.b);
    if (b.size() != cert.b.size()) {
        out.violation = "B has repeated vertices";
        return out;
    }
    if (int(b.size()) < k) {
        out.violation = "|B| < k";
        return out;
    }
    for (int v : b)
        if (v < 0 || v >= g.n()) {
            out.violation = "B vertex out of range";
            return out;
        }
    struct PairPaths {
        std::pair<int, int> key;
        std::vector<std::vector<int>> sets;  // sorted vertex sets
    };
    std::vector<PairPaths> all;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j) {
            auto key = std::make_pair(b[i], b[j]);
            auto it = cert.paths.find(key);
            if (it == cert.paths.end() || int(it->second.size()) < k) {
                out.violation = "pair {" + std::to_string(b[i]) + "," + std::to_string(b[j]) +
                                "}: fewer than k paths";
                return out;
            }
            PairPaths pp;
            pp.key = key;
            for (const auto& pv : it->second) {
                PathSeq p{pv};
                if (!is_path(g, p) || pv.front() != b[i] || pv.back() != b[j]) {
                    out.violation = "pair {" + std::to_string(b[i]) + "," + std::to_string(b[j]) +
                                    "}: malformed path";
                    return out;
                }
                pp.sets.push_back(sorted_unique(pv));
            }
            // Internal disjointness within the pair.
            for (size_t a = 0; a < pp.sets.size(); ++a)
                for (size_t c = a + 1; c < pp.sets.size(); ++c) {
                    auto inter = set_and(pp.sets[a], pp.sets[c]);
                    if (inter != std::vector<int>{std::min(b[i], b[j]), std::max(b[i], b[j])}) {
                        out.violation = "pair {" + std::to_string(b[i]) + "," +
                                        std::to_string(b[j]) + "}: paths share an interior vertex";
                        return out;
                    }
                }
            all.push_back(std::move(pp));
        }
    for (size_t a = 0; a < all.size(); ++a)
        for (size_t c = a + 1; c < all.size(); ++c) {
            std::vector<int> shared = set_and(
                std::vector<int>{all[a].key.first, all[a].key.second},
                std::vector<int>{all[c].key.first, all[c].key.second});
            for (const auto& pa : all[a].sets)
                for (const auto& pc : all[c].sets) {
                    if (set_and(pa, pc) != shared) {
                        out.violation = "cross-pair intersection rule violated between {" +
                                        std::to_string(all[a].key.first) + "," +
                                        std::to_string(all[a].key.second) + "} and {" +
                                        std::to_string(all[c].key.first) + "," +
                                        std::to_string(all[c].key.second) + "}";
                        return out;
                    }
                }
        }
    out.valid = true;
    return out;
}

namespace {

std::optional<StrongBlockCert> route_block(const Graph& g, const std::vector<int>& b, int k,
                                           Budget& budget) {
    StrongBlockCert cert;
    cert.k = k;
    cert.b = sorted_unique(b);
    Bits reserved(g.n());  // interiors used by earlier pairs
    Bits bbits = to_bits(g.n(), cert.b);
    for (size_t i = 0; i < cert.b.size(); ++i)
        for (size_t j = i + 1; j < cert.b.size(); ++j) {
            if (!budget.tick(16)) return std::nullopt;
            int x = cert.b[i], y = cert.b[j];
            Bits allowed(g.n());
            for (int v = 0; v < g.n(); ++v)
                if (!reserved.get(v) && !bbits.get(v)) allowed.set(v);
            allowed.set(x);
            allowed.set(y);
            auto sys = flow_paths(g, x, y, allowed);
            if (sys.count < k || int(sys.paths.size()) < k) return std::nullopt;
            sys.paths.resize(k);
            for (const auto& p : sys.paths)
                for (size_t t = 1; t + 1 < p.size(); ++t) reserved.set(p[t]);
            cert.paths[{x, y}] = sys.paths;
        }
    return cert;
}

}  // namespace

std::optional<StrongBlockCert> find_strong_block(const Graph& g, int k, Budget& budget) {
    if (k < 1) throw std::invalid_argument("find_strong_block: k must be >= 1");
    auto seed = find_k_block(g, k);
    if (!seed) return std::nullopt;
    std::vector<std::vector<int>> candidates;
    candidates.push_back(*seed);
    // k-subsets of the seed, lexicographic, as fallbacks.
    if (int(seed->size()) > k) {
        std::vector<int> idx(k);
        std::function<void(int, int)> gen = [&](int from, int depth) {
            if (int(candidates.size()) > 64) return;
            if (depth == k) {
                std::vector<int> c;
                for (int t : idx) c.push_back((*seed)[t]);
                candidates.push_back(c);
                return;
            }
            for (int t = from; t < int(seed->size()); ++t) {
                idx[depth] = t;
                gen(t + 1, depth + 1);
            }
        };
        gen(0, 0);
    }
    for (const auto& cand : candidates) {
        if (budget.exhausted()) return std::nullopt;
        auto cert = route_block(g, cand, k, budget);
        if (cert && verify_strong_block(g, *cert, k).valid) return cert;
    }
    return std::nullopt;
}

RefineResult distance_refine(const Graph& g, const std::vector<int>& b0, int x_size, int d,
                             int k, Budget& budget) {
    if (d < 1 || k < 1) throw std::invalid_argument("distance_refine: need d>=1, k>=1");
    auto b = sorted_unique(b0);
    if (x_size < 1 || x_size > int(b.size()))
        throw std::invalid_argument("distance_refine: x_size must be within |B0|");
    RefineResult res;
    std::vector<int> X(b.begin(), b.begin() + x_size);
    Bits xbits = to_bits(g.n(), X);
    Bits u(g.n());
    // Greedy short-path collection over 2-subsets in lexicographic order.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < x_size; ++i)
        for (int j = i + 1; j < x_size; ++j) pairs.emplace_back(X[i], X[j]);
    std::vector<char> joined(pairs.size(), 0);
    for (size_t e = 0; e < pairs.size(); ++e) {
        auto [xi, yi] = pairs[e];
        Bits allowed(g.n());
        for (int v = 0; v < g.n(); ++v)
            if (!u.get(v) && !xbits.get(v)) allowed.set(v);
        allowed.set(xi);
        allowed.set(yi);
        // Shortest path whose interior avoids U and X.
        std::vector<int> par(g.n(), -1);
        std::deque<int> q{xi};
        std::vector<int> dist(g.n(), -1);
        dist[xi] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (v == yi || dist[v] >= d) continue;
            for (int w : g.neighbors(v)) {
                if (!allowed.get(w) || dist[w] != -1) continue;
                if (w != yi && w != xi && (u.get(w) || xbits.get(w))) continue;
                dist[w] = dist[v] + 1;
                par[w] = v;
                q.push_back(w);
            }
        }
        if (dist[yi] != -1 && dist[yi] <= d) {
            joined[e] = 1;
            int v = par[yi];
            while (v != xi && v != -1) {
                u.set(v);
                v = par[v];
            }
        }
    }
    // Auxiliary graph on X positions.
    std::vector<std::pair<int, int>> g0_edges;
    std::vector<int> pos_of(g.n(), -1);
    for (int i = 0; i < x_size; ++i) pos_of[X[i]] = i;
    for (size_t e = 0; e < pairs.size(); ++e)
        if (joined[e]) g0_edges.emplace_back(pos_of[pairs[e].first], pos_of[pairs[e].second]);
    Graph g0(x_size, g0_edges);
    res.trace.push_back("auxiliary graph has " + std::to_string(g0.m()) + " edges over " +
                        std::to_string(x_size) + " vertices");
    // Stable set: exact up to 20 vertices, greedy beyond.
    std::vector<int> stable;
    if (x_size <= 20) {
        std::vector<int> cur, bestv;
        std::function<void(int)> go = [&](int from) {
            if (int(cur.size()) > int(bestv.size())) bestv = cur;
            for (int v = from; v < x_size; ++v) {
                bool ok = true;
                for (int w : cur)
                    if (g0.has_edge(v, w)) ok = false;
                if (!ok) continue;
                cur.push_back(v);
                go(v + 1);
                cur.pop_back();
            }
        };
        go(0);
        stable = bestv;
        res.stable_set_exact = true;
    } else {
        std::vector<char> dead(x_size, 0);
        while (true) {
            int pick = -1, best_deg = 1 << 30;
            for (int v = 0; v < x_size; ++v) {
                if (dead[v]) continue;
                int deg = 0;
                for (int w : g0.neighbors(v)) deg += !dead[w];
                if (deg < best_deg) {
                    best_deg = deg;
                    pick = v;
                }
            }
            if (pick == -1) break;
            stable.push_back(pick);
            dead[pick] = 1;
            for (int w : g0.neighbors(pick)) dead[w] = 1;
        }
        std::sort(stable.begin(), stable.end());
        res.stable_set_exact = false;
    }
    for (int p : stable) res.s.push_back(X[p]);
    res.s = sorted_unique(std::move(res.s));
    res.achieved = int(res.s.size());
    res.a = u.to_vector();
    for (int x : set_minus(X, res.s)) res.a.push_back(x);
    res.a = sorted_unique(std::move(res.a));
    res.trace.push_back("stable set size " + std::to_string(res.achieved) +
                        (res.stable_set_exact ? " (exact)" : " (greedy)"));
    if (res.achieved < k) {
        res.trace.push_back("stable set smaller than k");
        return res;
    }
    // Postcondition: S is d-stable in g - A (always holds by construction;
    // re-checked as a safety net).
    Bits gone = to_bits(g.n(), res.a);
    for (int s0 : res.s) {
        Bits allowed(g.n());
        for (int v = 0; v < g.n(); ++v)
            if (!gone.get(v)) allowed.set(v);
        auto dist = bfs_distances(g, s0, allowed);
        for (int s1 : res.s)
            if (s1 != s0 && dist[s1] != -1 && dist[s1] <= d) {
                res.trace.push_back("d-stability violated between " + std::to_string(s0) +
                                    " and " + std::to_string(s1));
                return res;
            }
    }
    // Attempt a routed strong k-block certificate for S in g - A.
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!gone.get(v)) keep.push_back(v);
    auto sub = induced_subgraph(g, keep);
    std::vector<int> s_local;
    for (int v : res.s) s_local.push_back(sub.from_host[v]);
    auto cert_local = route_block(sub.graph, s_local, k, budget);
    if (cert_local && verify_strong_block(sub.graph, *cert_local, k).valid) {
        StrongBlockCert lift;
        lift.k = k;
        for (int v : cert_local->b) lift.b.push_back(sub.to_host[v]);
        for (auto& [key, ps] : cert_local->paths) {
            std::vector<std::vector<int>> lifted;
            for (auto& p : ps) {
                std::vector<int> lp;
                for (int v : p) lp.push_back(sub.to_host[v]);
                lifted.push_back(std::move(lp));
            }
            lift.paths[{sub.to_host[key.first], sub.to_host[key.second]}] = std::move(lifted);
        }
        res.routed = std::move(lift);
        res.trace.push_back("routed strong block certificate at k in g-A");
    } else {
        res.trace.push_back("no routed strong block certificate found at k");
    }
    res.ok = true;
    return res;
}

}  // namespace twforge
