#pragma once

#include <optional>
#include <span>

#include "torus/graph.hpp"
#include "torus/witness.hpp"

namespace torus {

// Minor containment by exhaustive vertex deletion / edge contraction down to
// |V(h)| vertices, followed by a spanning-subgraph embedding test. Visited
// intermediate graphs are memoised by canonical form. Requires h to have minimum
// degree >= 1 and g at most 64 vertices; exponential, meant for small graphs.
std::optional<MinorWitness> find_minor(const Graph& g, const Graph& h);
bool has_minor(const Graph& g, const Graph& h);

// Topological containment: corners are placed one at a time and every pattern edge
// whose ends are both placed is routed as a path internally disjoint from everything
// used so far. Requires h to have minimum degree >= 3.
//
// pinned[x] >= 0 forces pattern vertex x onto that host vertex.
std::optional<SubdivisionWitness> find_subdivision(const Graph& g, const Graph& h, Pattern tag = Pattern::Other,
                                                   std::span<const int> pinned = {});
bool has_subdivision(const Graph& g, const Graph& h);

}  // namespace torus
