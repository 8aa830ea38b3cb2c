#include "twforge/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace twforge {

Wall make_wall(int t) {
    if (t < 2) throw std::invalid_argument("make_wall: t must be >= 2");
    Wall w;
    w.t = t;
    w.rows = t;
    w.cols = 2 * t - 2;
    std::vector<std::pair<int, int>> es;
    for (int r = 0; r < w.rows; ++r)
        for (int c = 0; c + 1 < w.cols; ++c) es.emplace_back(w.id(r, c), w.id(r, c + 1));
    for (int p = 0; p + 1 < w.rows; ++p) {
        int start = (p % 2 == 0) ? 0 : 1;
        for (int c = start; c < w.cols; c += 2) es.emplace_back(w.id(p, c), w.id(p + 1, c));
    }
    // Close the two exposed corners so the boundary has no degree-1 vertex.
    es.emplace_back(w.id(0, w.cols - 1), w.id(1, w.cols - 1));
    int last = w.rows - 2;
    int exposed = (last % 2 == 0) ? w.cols - 1 : 0;
    es.emplace_back(w.id(last, exposed), w.id(last + 1, exposed));
    w.graph = Graph(w.rows * w.cols, es);
    return w;
}

int RootedStarForest::reach() const {
    int r = 0;
    for (const auto& c : components)
        for (const auto& s : c.stems) r = std::max(r, int(s.size()) - 1);
    return r;
}

std::vector<int> RootedStarForest::roots() const {
    std::vector<int> out;
    for (const auto& c : components) out.push_back(c.root);
    return out;
}

std::vector<int> RootedStarForest::leaves() const {
    std::vector<int> out;
    for (const auto& c : components)
        for (const auto& s : c.stems) out.push_back(s.front());
    return out;
}

std::vector<int> RootedStarForest::all_vertices() const {
    std::vector<int> out;
    for (const auto& c : components) {
        out.push_back(c.root);
        for (const auto& s : c.stems) out.insert(out.end(), s.begin(), s.end());
    }
    return sorted_unique(std::move(out));
}

bool check_forest_in_host(const Graph& g, const RootedStarForest& f) {
    std::vector<int> all;
    std::vector<std::pair<int, int>> expected;
    for (const auto& comp : f.components) {
        if (comp.root < 0 || comp.root >= g.n()) return false;
        all.push_back(comp.root);
        std::vector<int> seconds;
        for (const auto& stem : comp.stems) {
            if (stem.size() < 2 || stem.back() != comp.root) return false;
            for (size_t i = 0; i + 1 < stem.size(); ++i) {
                if (!g.has_edge(stem[i], stem[i + 1])) return false;
                int a = std::min(stem[i], stem[i + 1]), b = std::max(stem[i], stem[i + 1]);
                expected.emplace_back(a, b);
            }
            // Stems of one component meet only at the root.
            for (size_t i = 0; i + 1 < stem.size(); ++i) all.push_back(stem[i]);
            seconds.push_back(stem[stem.size() - 2]);
        }
        if (sorted_unique(seconds).size() != seconds.size()) return false;
    }
    auto verts = sorted_unique(all);
    if (verts.size() != all.size()) return false;
    std::sort(expected.begin(), expected.end());
    auto sub = induced_subgraph(g, verts);
    std::vector<std::pair<int, int>> actual;
    for (auto [u, v] : sub.graph.edges())
        actual.emplace_back(std::min(sub.to_host[u], sub.to_host[v]),
                            std::max(sub.to_host[u], sub.to_host[v]));
    std::sort(actual.begin(), actual.end());
    return actual == expected;
}

StarForestGraph make_star_forest(int theta, int delta, int lambda) {
    if (theta < 1 || delta < 0 || lambda < 1)
        throw std::invalid_argument("make_star_forest: need theta>=1, delta>=0, lambda>=1");
    StarForestGraph out;
    std::vector<std::pair<int, int>> es;
    int per = 1 + delta * lambda;
    for (int c = 0; c < theta; ++c) {
        int base = c * per;
        RootedStarForest::Component comp;
        comp.root = base;
        for (int j = 0; j < delta; ++j) {
            std::vector<int> stem;  // leaf -> root
            int first = base + 1 + j * lambda;
            for (int k = lambda - 1; k >= 0; --k) stem.push_back(first + k);
            stem.push_back(base);
            for (size_t i = 0; i + 1 < stem.size(); ++i) es.emplace_back(stem[i], stem[i + 1]);
            comp.stems.push_back(std::move(stem));
        }
        out.forest.components.push_back(std::move(comp));
    }
    out.graph = Graph(theta * per, es);
    return out;
}

bool check_widening(const std::vector<int>& path, const std::vector<int>& marks,
                    const WideningSpec& spec) {
    if (spec.theta < 1 || int(marks.size()) != 2 * spec.theta) return false;
    std::vector<int> pos;
    for (int mk : marks) {
        auto it = std::find(path.begin(), path.end(), mk);
        if (it == path.end()) return false;
        pos.push_back(int(it - path.begin()));
    }
    if (pos.front() != 0 || pos.back() != int(path.size()) - 1) return false;
    if (!std::is_sorted(pos.begin(), pos.end())) return false;
    for (int i = 0; i < spec.theta; ++i)
        if (pos[2 * i + 1] - pos[2 * i] != spec.rho) return false;
    for (int i = 0; i + 1 < spec.theta; ++i) {
        int gap = pos[2 * i + 2] - pos[2 * i + 1];
        if (gap < spec.sigma) return false;
        if (spec.strict && gap != spec.sigma) return false;
    }
    return true;
}

DaviesGraph make_davies(int rho, int sigma, int theta) {
    if (rho < 0 || sigma < 1 || theta < 2)
        throw std::invalid_argument("make_davies: need rho>=0, sigma>=1, theta>=2");
    DaviesGraph out;
    out.rho = rho;
    out.sigma = sigma;
    out.theta = theta;
    int len = theta * rho + (theta - 1) * sigma;  // edges per path
    int per = len + 1;
    std::vector<std::pair<int, int>> es;
    for (int j = 0; j < theta; ++j) {
        int base = j * per;
        std::vector<int> path;
        for (int k = 0; k <= len; ++k) path.push_back(base + k);
        for (int k = 0; k < len; ++k) es.emplace_back(base + k, base + k + 1);
        std::vector<int> mk;
        for (int i = 0; i < theta; ++i) {
            mk.push_back(base + i * (rho + sigma));
            mk.push_back(base + i * (rho + sigma) + rho);
        }
        out.paths.push_back(std::move(path));
        out.marks.push_back(std::move(mk));
    }
    for (int i = 0; i < theta; ++i) {
        int hub = theta * per + i;
        out.hubs.push_back(hub);
        for (int j = 0; j < theta; ++j)
            for (int p = i * (rho + sigma); p <= i * (rho + sigma) + rho; ++p)
                es.emplace_back(hub, j * per + p);
    }
    out.graph = Graph(theta * per + theta, es);
    return out;
}

Caterpillar make_caterpillar(const std::vector<int>& gaps, int sigma,
                             const std::vector<int>& stem_lengths) {
    int theta = int(gaps.size()) + 1;
    if (theta < 2) throw std::invalid_argument("make_caterpillar: need at least one gap");
    if (sigma < 1) throw std::invalid_argument("make_caterpillar: sigma must be >= 1");
    for (int gp : gaps)
        if (gp < sigma) throw std::invalid_argument("make_caterpillar: gap below sigma");
    std::vector<int> stems = stem_lengths;
    if (stems.empty()) stems.assign(std::max(0, theta - 2), 1);
    if (int(stems.size()) != theta - 2)
        throw std::invalid_argument("make_caterpillar: need a stem length per middle leaf");
    for (int sl : stems)
        if (sl < 1) throw std::invalid_argument("make_caterpillar: stem length must be >= 1");

    Caterpillar out;
    int spine_len = 0;
    for (int gp : gaps) spine_len += gp;
    std::vector<std::pair<int, int>> es;
    for (int k = 0; k <= spine_len; ++k) out.spine.push_back(k);
    for (int k = 0; k < spine_len; ++k) es.emplace_back(k, k + 1);
    int next = spine_len + 1;
    out.leaves.push_back(out.spine.front());
    out.branch_of.push_back(out.spine.front());
    int at = 0;
    for (int i = 0; i < theta - 2; ++i) {
        at += gaps[i];
        int branch = out.spine[at];
        int prev = branch;
        for (int k = 0; k < stems[i]; ++k) {
            es.emplace_back(prev, next);
            prev = next++;
        }
        out.leaves.push_back(prev);
        out.branch_of.push_back(branch);
    }
    out.leaves.push_back(out.spine.back());
    out.branch_of.push_back(out.spine.back());
    out.graph = Graph(next, es);
    return out;
}

}  // namespace twforge
