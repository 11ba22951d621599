#pragma once

#include <cstdint>
#include <vector>

#include "torus/graph.hpp"

namespace torus {

// One representative of every isomorphism class of graphs on exactly n vertices,
// grown vertex by vertex and deduplicated by canonical form. Practical up to n = 8.
std::vector<Graph> all_graphs(int n);

// Deterministic pseudo-random simple graph, G(n, p).
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace torus
