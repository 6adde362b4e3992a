#pragma once

#include <string>
#include <string_view>

#include "genus/graph.hpp"

namespace genus {

// Line-oriented "u v" edge list. '#' starts a comment line, blank lines are
// skipped. Vertex labels are relabelled densely in order of first
// appearance; a repeated line is a parallel edge.
Graph parse_edge_list(std::string_view text);

// McKay's graph6 (an optional ">>graph6<<" prefix and trailing newline are
// accepted). Always yields a simple graph.
Graph parse_graph6(std::string_view text);

// Throws InputError(InvalidParameters) for multigraphs.
std::string encode_graph6(const Graph& g);

std::string write_edge_list(const Graph& g);

enum class GraphFormat { EdgeList, Graph6 };

Graph parse_graph(std::string_view text, GraphFormat format);
Graph load_graph_file(const std::string& path, GraphFormat format);

}  // namespace genus
