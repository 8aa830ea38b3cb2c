#include "twforge/io.hpp"

#include <cctype>
#include <sstream>

namespace twforge {

namespace {

constexpr int kBias = 63;

std::string encode_g6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(char(n + kBias));
    } else if (n <= 258047) {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 0x3f) + kBias));
        out.push_back(char(((n >> 6) & 0x3f) + kBias));
        out.push_back(char((n & 0x3f) + kBias));
    } else {
        throw std::invalid_argument("graph6: vertex count too large");
    }
    int bit = 5;
    int acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) acc |= 1 << bit;
            if (--bit < 0) {
                out.push_back(char(acc + kBias));
                acc = 0;
                bit = 5;
            }
        }
    if (bit != 5) out.push_back(char(acc + kBias));
    return out;
}

Graph decode_g6(const std::string& s) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > s.size()) throw ParseError("graph6: truncated input", pos);
    };
    need(1);
    int n;
    if (s[pos] == 126) {
        need(4);
        if (s[pos + 1] == 126) throw ParseError("graph6: 36-bit sizes unsupported", pos);
        n = 0;
        for (int k = 1; k <= 3; ++k) {
            int c = int(s[pos + k]) - kBias;
            if (c < 0 || c > 63) throw ParseError("graph6: bad size byte", pos + k);
            n = (n << 6) | c;
        }
        pos += 4;
    } else {
        n = int(s[pos]) - kBias;
        if (n < 0 || n > 62) throw ParseError("graph6: bad size byte", pos);
        pos += 1;
    }
    std::vector<std::pair<int, int>> edges;
    int bit = -1, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bit < 0) {
                need(1);
                acc = int(s[pos]) - kBias;
                if (acc < 0 || acc > 63) throw ParseError("graph6: bad data byte", pos);
                ++pos;
                bit = 5;
            }
            if ((acc >> bit) & 1) edges.emplace_back(i, j);
            --bit;
        }
    while (pos < s.size() && (s[pos] == '\n' || s[pos] == '\r')) ++pos;
    if (pos != s.size()) throw ParseError("graph6: trailing bytes", pos);
    return Graph(n, edges);
}

Graph decode_dimacs(const std::string& s) {
    std::istringstream in(s);
    std::string line;
    int n = -1;
    long m = -1;
    std::vector<std::pair<int, int>> edges;
    size_t pos = 0;
    while (std::getline(in, line)) {
        size_t line_pos = pos;
        pos += line.size() + 1;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            ls >> kind >> n >> m;
            if (ls.fail() || (kind != "edge" && kind != "col"))
                throw ParseError("dimacs: malformed problem line", line_pos);
        } else if (tag == "e") {
            long u, v;
            ls >> u >> v;
            if (ls.fail()) throw ParseError("dimacs: malformed edge line", line_pos);
            if (n < 0) throw ParseError("dimacs: edge before problem line", line_pos);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("dimacs: endpoint out of range", line_pos);
            edges.emplace_back(int(u - 1), int(v - 1));
        } else if (!tag.empty()) {
            throw ParseError("dimacs: unknown line tag '" + tag + "'", line_pos);
        }
    }
    if (n < 0) throw ParseError("dimacs: missing problem line", 0);
    return Graph(n, edges);
}

std::string encode_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

Graph decode_edgelist(const std::string& s) {
    std::istringstream in(s);
    long n;
    if (!(in >> n) || n < 0) throw ParseError("edgelist: leading vertex count required", 0);
    std::vector<std::pair<int, int>> edges;
    long u, v;
    while (in >> u) {
        if (!(in >> v)) throw ParseError("edgelist: dangling endpoint", size_t(in.tellg()));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edgelist: endpoint out of range", size_t(std::max<long>(0, in.tellg())));
        edges.emplace_back(int(u), int(v));
    }
    return Graph(int(n), edges);
}

std::string encode_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace

Graph parse_graph(const std::string& bytes, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: {
            std::string t = bytes;
            while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) t.pop_back();
            return decode_g6(t);
        }
        case GraphFormat::Dimacs: return decode_dimacs(bytes);
        case GraphFormat::EdgeList: return decode_edgelist(bytes);
    }
    throw std::invalid_argument("parse_graph: unknown format");
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return encode_g6(g) + "\n";
        case GraphFormat::Dimacs: return encode_dimacs(g);
        case GraphFormat::EdgeList: return encode_edgelist(g);
    }
    throw std::invalid_argument("emit_graph: unknown format");
}

GraphFormat detect_format(const std::string& bytes) {
    size_t i = 0;
    while (i < bytes.size() && std::isspace(uint8_t(bytes[i]))) ++i;
    if (bytes.compare(i, 2, "p ") == 0 || bytes.compare(i, 2, "c ") == 0 ||
        bytes.compare(i, 2, "e ") == 0)
        return GraphFormat::Dimacs;
    // Leading decimal integer on its own line: edge list.
    size_t j = i;
    while (j < bytes.size() && std::isdigit(uint8_t(bytes[j]))) ++j;
    if (j > i && (j == bytes.size() || std::isspace(uint8_t(bytes[j])))) return GraphFormat::EdgeList;
    return GraphFormat::Graph6;
}

std::string graph_digest(const Graph& g) {
    std::string g6 = encode_g6(g);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : g6) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
    return buf;
}

}  // namespace twforge
