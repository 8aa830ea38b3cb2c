#include "twforge/iso.hpp"

#include <algorithm>
#include <map>

namespace twforge {

namespace {

// Iterated neighborhood-color refinement (1-WL). Returns stable colors.
std::vector<int> refine_colors(const Graph& g) {
    std::vector<int> color(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) color[v] = g.degree(v);
    for (int round = 0; round < g.n(); ++round) {
        std::map<std::pair<int, std::vector<int>>, int> next_id;
        std::vector<int> next(g.n());
        for (int v = 0; v < g.n(); ++v) {
            std::vector<int> sig;
            for (int w : g.neighbors(v)) sig.push_back(color[w]);
            std::sort(sig.begin(), sig.end());
            auto key = std::make_pair(color[v], std::move(sig));
            auto it = next_id.find(key);
            if (it == next_id.end()) it = next_id.emplace(std::move(key), int(next_id.size())).first;
            next[v] = it->second;
        }
        bool stable = std::equal(color.begin(), color.end(), next.begin());
        color = std::move(next);
        if (stable) break;
    }
    return color;
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> ca, cb;
    std::vector<int> map_ab;  // a-vertex -> b-vertex or -1
    std::vector<char> used_b;

    bool extend(int i, const std::vector<int>& order) {
        if (i == int(order.size())) return true;
        int u = order[i];
        for (int v = 0; v < b.n(); ++v) {
            if (used_b[v] || ca[u] != cb[v]) continue;
            bool ok = true;
            for (int w : a.neighbors(u)) {
                int mw = map_ab[w];
                if (mw != -1 && !b.has_edge(v, mw)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // Non-neighbors already mapped must stay non-adjacent.
                for (int j = 0; j < i && ok; ++j) {
                    int w = order[j];
                    if (!a.has_edge(u, w) && b.has_edge(v, map_ab[w])) ok = false;
                }
            }
            if (!ok) continue;
            map_ab[u] = v;
            used_b[v] = 1;
            if (extend(i + 1, order)) return true;
            map_ab[u] = -1;
            used_b[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
    IsoSearch s{a, b, refine_colors(a), refine_colors(b), std::vector<int>(a.n(), -1),
                std::vector<char>(b.n(), 0)};
    auto hist = [](const std::vector<int>& c) {
        std::vector<int> h = c;
        std::sort(h.begin(), h.end());
        return h;
    };
    if (hist(s.ca) != hist(s.cb)) return std::nullopt;
    // Order a-vertices to keep the partial map connected where possible.
    std::vector<int> order;
    std::vector<char> placed(a.n(), 0);
    while (int(order.size()) < a.n()) {
        int pick = -1;
        for (int v = 0; v < a.n(); ++v) {
            if (placed[v]) continue;
            bool touches = false;
            for (int w : a.neighbors(v)) touches |= bool(placed[w]);
            if (touches) {
                pick = v;
                break;
            }
        }
        if (pick == -1)
            for (int v = 0; v < a.n() && pick == -1; ++v)
                if (!placed[v]) pick = v;
        placed[pick] = 1;
        order.push_back(pick);
    }
    if (s.extend(0, order)) return s.map_ab;
    return std::nullopt;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    return find_isomorphism(a, b).has_value();
}

}  // namespace twforge
