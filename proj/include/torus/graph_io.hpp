#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "torus/graph.hpp"

namespace torus {

enum class GraphFormat { EdgeList, Graph6 };

// graph6, as produced by nauty's geng/showg. An optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge-list text: a line "n m" followed by m lines "u v" with 0-based labels.
// Blank lines separate consecutive graphs; '#' starts a comment.
std::vector<Graph> read_edge_lists(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);

// One graph6 string per non-empty line.
std::vector<Graph> read_graph6_lines(std::istream& in);

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);

}  // namespace torus
