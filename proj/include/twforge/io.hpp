#pragma once

#include <stdexcept>
#include <string>

#include "twforge/graph.hpp"

namespace twforge {

enum class GraphFormat { Graph6, Dimacs, EdgeList };

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at byte " + std::to_string(pos) + ")"), position(pos) {}
};

Graph parse_graph(const std::string& bytes, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

// Best-effort sniffing: "p edge" header = DIMACS, leading integer line =
// edge list, otherwise graph6.
GraphFormat detect_format(const std::string& bytes);

// FNV-1a of the canonical graph6 encoding; used as the input digest in
// reports.
std::string graph_digest(const Graph& g);

}  // namespace twforge
