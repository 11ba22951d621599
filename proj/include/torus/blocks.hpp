#pragma once

#include <span>
#include <vector>

#include "torus/graph.hpp"

namespace torus {

// Maximal 2-connected subgraphs; a bridge edge of the graph is a block of its own.
struct BlockDecomposition {
    std::vector<std::vector<Edge>> blocks;
    std::vector<int> cut_vertices;  // sorted

    // Vertex set of block i, sorted.
    std::vector<int> block_vertices(std::size_t i) const;
};

BlockDecomposition blocks(const Graph& g);

// One bridge of g relative to a subgraph H.
//
// Single-edge form: no internal vertices, one edge with both ends in V(H).
// Component form: a connected component of g - V(H) plus all edges joining it to V(H).
struct BridgeOf {
    std::vector<int> attachment_vertices;  // sorted
    std::vector<int> internal_vertices;    // sorted
    std::vector<Edge> edges;               // sorted

    bool is_single_edge() const { return internal_vertices.empty(); }
};

// Bridges of g with respect to H = (h_vertices, h_edges). Edges in h_edges are not
// part of any bridge; the returned bridges partition the remaining edges.
std::vector<BridgeOf> bridges_of(const Graph& g, std::span<const int> h_vertices, std::span<const Edge> h_edges = {});

}  // namespace torus
